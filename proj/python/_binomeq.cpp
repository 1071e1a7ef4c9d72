// Python bindings. Python ints cross the boundary as exact GMP integers.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "binomeq/binomials.hpp"
#include "binomeq/corpus.hpp"
#include "binomeq/curves.hpp"
#include "binomeq/equal_index.hpp"
#include "binomeq/polyid.hpp"
#include "binomeq/reproduce.hpp"
#include "binomeq/sieve.hpp"

namespace py = pybind11;
using namespace binomeq;

namespace pybind11::detail {

template <>
struct type_caster<mpz_class> {
    PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

    bool load(handle src, bool) {
        if (!src || !PyLong_Check(src.ptr())) return false;
        const auto text = py::str(src).cast<std::string>();
        return value.set_str(text, 10) == 0;
    }

    static handle cast(const mpz_class& v, return_value_policy, handle) {
        return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
    }
};

}  // namespace pybind11::detail

namespace {

using PyPairs = std::vector<std::pair<BigInt, BigInt>>;

PyPairs solve_equal(unsigned k, const BigInt& d, bool all_integers) {
    auto sols = k == 2 ? solve_equal_index_k2(d) : solve_equal_index(k, d);
    return all_integers ? sols : filter_positive(sols, k);
}

py::dict corpus_report(const std::optional<std::string>& path) {
    const auto rep = verify_corpus(path ? load_corpus(*path) : builtin_corpus());
    py::dict out;
    out["records"] = rep.records.size();
    out["failures"] = rep.failures();
    out["per_source"] = rep.per_source;
    py::list failed;
    for (const auto& r : rep.records) {
        if (!r.passed) failed.append(format_record(r.record));
    }
    out["failed"] = failed;
    return out;
}

py::dict k22(unsigned k, const std::string& sign) {
    if (sign != "plus" && sign != "minus") throw DomainError("sign must be 'plus' or 'minus'");
    const auto r = solve_k22(k, sign == "plus" ? K22Sign::Plus : K22Sign::Minus);
    py::list sols;
    for (const auto& s : r.solutions) sols.append(py::make_tuple(s.f1.to_string(), s.f2.to_string()));
    py::dict out;
    out["solutions"] = sols;
    out["certificate"] = r.certificate ? py::object(py::int_(r.certificate->exponent)) : py::none();
    out["log"] = r.log;
    return out;
}

py::dict criterion(unsigned id, bool slow, unsigned workers) {
    ReproduceConfig cfg;
    cfg.slow = slow;
    cfg.workers = workers;
    const auto r = run_criterion(id, cfg);
    py::dict out;
    out["id"] = r.id;
    out["title"] = r.title;
    out["passed"] = r.passed;
    out["seconds"] = r.seconds;
    out["limit_seconds"] = r.limit_seconds;
    out["summary"] = r.summary;
    out["details"] = r.details;
    return out;
}

}  // namespace

PYBIND11_MODULE(_binomeq, m) {
    m.doc() = "Exact search and verification for binom(n,k) = binom(m,l) + d";
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    m.def("binom", &binom, py::arg("n"), py::arg("k"), "Generalized binomial coefficient, any integer n.");
    m.def("binom_inverse", &binom_inverse, py::arg("value"), py::arg("k"), "n >= k with binom(n, k) == value, or None.");
    m.def(
        "verify_solution",
        [](unsigned k, unsigned l, const BigInt& d, const BigInt& n, const BigInt& mm) {
            return verify_solution({k, l, d, n, mm, "python"});
        },
        py::arg("k"), py::arg("l"), py::arg("d"), py::arg("n"), py::arg("m"),
        "binom(n, k) == binom(m, l) + d.");
    m.def("verify_corpus", &corpus_report, py::arg("path") = py::none(),
          "Checks the built-in corpus, or the file at `path`.");

    m.def(
        "congruence_solvable",
        [](unsigned k, unsigned l, const BigInt& d, std::uint64_t p, unsigned e) {
            return congruence_solvable({k, l, d, p, e});
        },
        py::arg("k"), py::arg("l"), py::arg("d"), py::arg("p"), py::arg("exponent") = 1);
    m.def(
        "scan_unsolvable",
        [](unsigned k_max, unsigned l_max, std::uint64_t p_max, unsigned workers) {
            std::vector<std::tuple<unsigned, unsigned, std::uint64_t, std::vector<std::uint64_t>>> out;
            for (const auto& e : scan_unsolvable(k_max, l_max, p_max, workers).entries) {
                out.emplace_back(e.k, e.l, e.p, e.residues);
            }
            return out;
        },
        py::arg("k_max"), py::arg("l_max"), py::arg("p_max"), py::arg("workers") = 0,
        "(k, l, p, unsolvable residues) for every cell with at least one.");

    m.def("solve_equal_index", &solve_equal, py::arg("k"), py::arg("d"), py::arg("all_integers") = true,
          "Pairs (n, m) with binom(n, k) = binom(m, k) + d; k = 2 omits the m -> 1-m reflections.");
    m.def(
        "collision_search",
        [](unsigned k, std::uint64_t n_max, unsigned min_mult, unsigned workers) {
            return collision_search(k, n_max, min_mult, workers).collisions;
        },
        py::arg("k"), py::arg("n_max"), py::arg("min_multiplicity") = 2, py::arg("workers") = 0);

    m.def(
        "curve_models",
        [] {
            std::vector<std::tuple<unsigned, unsigned, std::string, std::string, bool>> out;
            for (const auto& s : verify_all_transforms()) {
                out.emplace_back(s.k, s.l, s.equation_text, s.transformation_text, certify(s));
            }
            return out;
        },
        "(k, l, model, map, certified) for every elliptic model.");
    m.def(
        "bounded_search",
        [](unsigned k, unsigned l, const BigInt& d, std::optional<std::uint64_t> m_bound, unsigned workers) {
            const auto bound = m_bound.value_or(default_m_bound(k, l));
            const auto recs = k == 2 && l == 5 ? bounded_search_25(d, 5, static_cast<std::int64_t>(bound), true, workers)
                                               : bounded_search(k, l, d, bound, workers);
            PyPairs out;
            for (const auto& r : recs) out.emplace_back(r.m, r.n);
            return out;
        },
        py::arg("k"), py::arg("l"), py::arg("d"), py::arg("m_bound") = py::none(), py::arg("workers") = 0,
        "Pairs (m, n) with l <= m <= m_bound.");

    m.def("solve_k22", &k22, py::arg("k"), py::arg("sign") = "plus",
          "Polynomial solutions with deg f1 = 2, deg f2 = k, or a t-power certificate.");
    m.def("run_criterion", &criterion, py::arg("id"), py::arg("slow") = false, py::arg("workers") = 0);
}
