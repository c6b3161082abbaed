#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "mhs/bernoulli.hpp"
#include "mhs/harmonic.hpp"
#include "mhs/primes.hpp"
#include "mhs/residue.hpp"
#include "mhs/statements.hpp"
#include "mhs/sweep.hpp"

namespace py = pybind11;

namespace {

py::object to_fraction(const mhs::Rational& q) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(q.to_string());
}

mhs::Rational from_py(const py::object& obj) {
    return mhs::Rational::from_string(py::cast<std::string>(py::str(obj)));
}

mhs::Modulus make_modulus(std::uint64_t p, unsigned e) {
    if (e == 1) return mhs::Modulus::p(p);
    if (e == 2) return mhs::Modulus::p2(p);
    throw py::value_error("modulus exponent must be 1 or 2");
}

mhs::MHSSignature make_signature(const std::vector<unsigned>& exponents, std::uint64_t bound,
                                 bool strict) {
    return mhs::MHSSignature{exponents, bound, strict};
}

mhs::WeightChar make_weight(const std::string& weight, const std::string& attach) {
    mhs::WeightChar w;
    w.kind = mhs::weight_from_name(weight);
    if (attach == "first") {
        w.attach = mhs::WeightAttach::first;
    } else if (attach == "last") {
        w.attach = mhs::WeightAttach::last;
    } else {
        throw py::value_error("attach must be 'first' or 'last'");
    }
    return w;
}

py::dict record_to_dict(const mhs::VerificationRecord& r) {
    py::dict d;
    d["statement_id"] = r.instance.id;
    d["p"] = r.instance.p;
    d["n"] = r.instance.n;
    d["a"] = r.instance.a;
    d["b"] = r.instance.b;
    d["status"] = std::string(mhs::status_name(r.status));
    d["reason"] = r.reason;
    d["detail"] = r.detail;
    d["micros"] = r.micros;
    if (r.status == mhs::Status::skipped) {
        d["modulus"] = py::none();
        d["lhs"] = py::none();
        d["rhs"] = py::none();
    } else {
        d["modulus"] = r.modulus;
        d["lhs"] = r.lhs;
        d["rhs"] = r.rhs;
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact verification of harmonic-sum congruences";

    m.def("is_prime", &mhs::is_prime, py::arg("n"));

    m.def(
        "bernoulli_number", [](unsigned n) { return to_fraction(mhs::bernoulli_number(n)); },
        py::arg("n"), "Exact Bernoulli number B_n as a Fraction.");
    m.def(
        "bernoulli_poly",
        [](unsigned n, const py::object& x) { return to_fraction(mhs::bernoulli_poly(n, from_py(x))); },
        py::arg("n"), py::arg("x"), "Exact Bernoulli polynomial value B_n(x).");

    m.def(
        "mhs_exact",
        [](const std::vector<unsigned>& exponents, std::uint64_t bound, bool strict) {
            return to_fraction(mhs::mhs_exact(make_signature(exponents, bound, strict)));
        },
        py::arg("exponents"), py::arg("bound"), py::arg("strict") = true,
        "Exact multiple harmonic sum by direct enumeration.");
    m.def(
        "mhs_mod",
        [](const std::vector<unsigned>& exponents, std::uint64_t bound, std::uint64_t p, unsigned e,
           const std::string& weight, const std::string& attach, bool strict) {
            return mhs::mhs_mod(make_signature(exponents, bound, strict),
                                make_weight(weight, attach), make_modulus(p, e))
                .value();
        },
        py::arg("exponents"), py::arg("bound"), py::arg("p"), py::arg("e") = 1,
        py::arg("weight") = "none", py::arg("attach") = "last", py::arg("strict") = true,
        "Weighted multiple harmonic sum mod p^e via the prefix recurrence.");
    m.def(
        "reduce_rational",
        [](const py::object& q, std::uint64_t p, unsigned e) {
            return mhs::reduce(from_py(q), make_modulus(p, e)).value();
        },
        py::arg("q"), py::arg("p"), py::arg("e") = 1,
        "Reduce a p-integral rational mod p^e.");
    m.def(
        "power_series_sum_mod",
        [](std::uint64_t x, unsigned n, std::uint64_t p, unsigned e) {
            const mhs::Modulus mod = make_modulus(p, e);
            return mhs::power_series_sum_mod(mhs::Residue(x, mod), n, mod).value();
        },
        py::arg("x"), py::arg("n"), py::arg("p"), py::arg("e") = 1);
    m.def(
        "composition_sum_bruteforce",
        [](std::uint64_t p, unsigned depth, const std::string& weight, std::uint64_t cap) {
            return mhs::composition_sum_bruteforce(p, depth, mhs::weight_from_name(weight),
                                                   mhs::Modulus::p(p), cap)
                .value();
        },
        py::arg("p"), py::arg("depth"), py::arg("weight") = "none",
        py::arg("cap") = mhs::kDefaultEnumerationCap);
    m.def(
        "composition_sum_collapsed",
        [](std::uint64_t p, unsigned depth, const std::string& weight) {
            return mhs::composition_sum_collapsed(p, depth, mhs::weight_from_name(weight),
                                                  mhs::Modulus::p(p))
                .value();
        },
        py::arg("p"), py::arg("depth"), py::arg("weight") = "none");

    m.def("statement_ids", []() {
        std::vector<std::string> ids;
        for (const auto& d : mhs::catalog()) ids.push_back(d.id);
        return ids;
    });
    m.def("catalog", []() {
        py::list out;
        for (const auto& d : mhs::catalog()) {
            py::dict e;
            e["id"] = d.id;
            e["modulus_exponent"] = d.modulus_exponent;
            e["takes_depth"] = d.takes_depth;
            e["takes_ab"] = d.takes_ab;
            e["lhs"] = d.lhs_text;
            e["rhs"] = d.rhs_text;
            e["guard"] = d.guard_text;
            out.append(std::move(e));
        }
        return out;
    });
    m.def(
        "evaluate",
        [](const std::string& id, std::uint64_t p, unsigned n, unsigned a, unsigned b,
           std::uint64_t cap, std::uint64_t p2_max) {
            mhs::EvalOptions options{cap, p2_max};
            return record_to_dict(mhs::evaluate({id, p, n, a, b}, options));
        },
        py::arg("statement"), py::arg("p"), py::arg("n") = 0, py::arg("a") = 0, py::arg("b") = 0,
        py::arg("cap") = mhs::kDefaultEnumerationCap, py::arg("p2_max") = 61,
        "Evaluate one statement instance and return the verification record.");
    m.def(
        "run_sweep",
        [](std::uint64_t p_min, std::uint64_t p_max, unsigned n_min, unsigned n_max,
           const std::vector<std::string>& statements, std::uint64_t cap, std::uint64_t p2_max,
           unsigned workers) {
            mhs::SweepConfig config;
            config.p_min = p_min;
            config.p_max = p_max;
            config.n_min = n_min;
            config.n_max = n_max;
            config.statements = statements;
            config.enumeration_cap = cap;
            config.p2_prime_cap = p2_max;
            config.workers = workers;
            const mhs::SweepReport report = mhs::run_sweep(config);
            py::dict out;
            py::dict summary;
            summary["pass"] = report.summary.pass;
            summary["fail"] = report.summary.fail;
            summary["skipped"] = report.summary.skipped;
            summary["total"] = report.summary.total();
            summary["elapsed_micros"] = report.summary.elapsed_micros;
            out["summary"] = std::move(summary);
            py::list records;
            for (const auto& r : report.records) records.append(record_to_dict(r));
            out["records"] = std::move(records);
            return out;
        },
        py::arg("p_min") = 5, py::arg("p_max") = 101, py::arg("n_min") = 1, py::arg("n_max") = 6,
        py::arg("statements") = std::vector<std::string>{}, py::arg("cap") = mhs::kDefaultEnumerationCap,
        py::arg("p2_max") = 61, py::arg("workers") = 0,
        "Run a verification sweep; statements=[] sweeps the whole catalog.");

    py::register_exception<mhs::Error>(m, "MhsError");

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "dev";
#endif
}
