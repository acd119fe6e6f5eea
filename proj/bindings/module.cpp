// pybind11 module: the library's main operations with exact rationals
// crossing the boundary as canonical "p/q" strings.

#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polylog/linforms.hpp"
#include "polylog/numerics.hpp"
#include "polylog/recur.hpp"

namespace py = pybind11;
using namespace pla;

namespace {

Rat parse_rat(const std::string& s) { return rat_from_string(s); }

std::vector<Rat> parse_rats(const std::vector<std::string>& v) {
    std::vector<Rat> out;
    out.reserve(v.size());
    for (const auto& s : v) out.push_back(parse_rat(s));
    return out;
}

py::object opt_rat(const std::optional<Rat>& v) {
    if (!v) return py::none();
    return py::str(to_string(*v));
}

py::dict row_to_dict(const LinearFormCoeffs& row) {
    py::dict d;
    d["construction"] = to_string(row.construction);
    d["n"] = row.n;
    d["z"] = to_string(row.z);
    d["a"] = to_string(row.a);
    d["b"] = opt_rat(row.b);
    d["b_tilde"] = opt_rat(row.b_tilde);
    d["b_tilde2"] = opt_rat(row.b_tilde2);
    return d;
}

LinearFormCoeffs row_from_args(const std::string& construction, long n,
                               const std::optional<std::string>& z) {
    ConstructionId c = construction_from_string(construction);
    switch (c) {
        case ConstructionId::LogDilog:
            if (!z) throw std::invalid_argument("log-dilog requires z");
            return coeffs_log_dilog(n, parse_rat(*z));
        case ConstructionId::Trilog:
            if (!z) throw std::invalid_argument("trilog requires z (use z=1 via the recurrence)");
            return coeffs_trilog(n, parse_rat(*z));
        case ConstructionId::WellPoised:
            if (z) throw std::invalid_argument("well-poised has z fixed at -1");
            return coeffs_well_poised(n);
    }
    throw std::invalid_argument("unknown construction");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact rational approximations to -, di- and trilogarithms";

    m.def(
        "coeffs",
        [](const std::string& construction, long n, const std::optional<std::string>& z) {
            return row_to_dict(row_from_args(construction, n, z));
        },
        py::arg("construction"), py::arg("n"), py::arg("z") = py::none(),
        "Linear-form coefficients a, b, b~, b~~ for one row, as rational strings.");

    m.def(
        "a_explicit",
        [](const std::string& construction, long n, const std::string& z) {
            return to_string(a_explicit(construction_from_string(construction), n, parse_rat(z)));
        },
        py::arg("construction"), py::arg("n"), py::arg("z"),
        "Closed binomial-sum formula for a_n.");

    m.def(
        "integrality_report",
        [](const std::string& construction, long n, const std::optional<std::string>& z) {
            auto rep = integrality_report(row_from_args(construction, n, z));
            py::list out;
            for (const auto& c : rep.checks) {
                py::dict d;
                d["name"] = c.name;
                d["value"] = to_string(c.scaled_value);
                d["pass"] = c.pass;
                d["stated"] = c.stated;
                out.append(std::move(d));
            }
            return out;
        },
        py::arg("construction"), py::arg("n"), py::arg("z") = py::none(),
        "Scaled-integrality checks for one row.");

    m.def(
        "remainder",
        [](const std::string& construction, long n, const std::optional<std::string>& z,
           long digits) {
            auto row = row_from_args(construction, n, z);
            auto rem = remainder(row, digits_for_n(row.construction, n, digits + 10));
            py::dict d;
            d["r"] = rem.r ? py::object(py::str(rem.r->to_string(digits))) : py::none();
            d["r_tilde"] =
                rem.r_tilde ? py::object(py::str(rem.r_tilde->to_string(digits))) : py::none();
            d["r_tilde2"] =
                rem.r_tilde2 ? py::object(py::str(rem.r_tilde2->to_string(digits))) : py::none();
            return d;
        },
        py::arg("construction"), py::arg("n"), py::arg("z") = py::none(), py::arg("digits") = 30,
        "Linear-form remainders a*L - b as decimal strings.");

    m.def(
        "direct_tail",
        [](const std::string& construction, long n, const std::string& z, int order, long digits) {
            return direct_tail(construction_from_string(construction), n, parse_rat(z), order,
                               digits)
                .to_string(digits);
        },
        py::arg("construction"), py::arg("n"), py::arg("z"), py::arg("order") = 0,
        py::arg("digits") = 30, "Independent series oracle for the remainders.");

    m.def(
        "polylog",
        [](int s, const std::string& z, long digits) {
            return polylog(s, parse_rat(z), digits).to_string(digits);
        },
        py::arg("s"), py::arg("z"), py::arg("digits") = 30);

    m.def(
        "constant",
        [](const std::string& name, long digits) {
            ConstantName c;
            if (name == "log2") c = ConstantName::Log2;
            else if (name == "pi") c = ConstantName::Pi;
            else if (name == "zeta2") c = ConstantName::Zeta2;
            else if (name == "zeta3") c = ConstantName::Zeta3;
            else throw std::invalid_argument("unknown constant: " + name);
            return constant(c, digits).to_string(digits);
        },
        py::arg("name"), py::arg("digits") = 30);

    m.def(
        "extend",
        [](const std::string& recurrence, const std::vector<std::string>& initial, long upto) {
            auto seq = extend(builtin(recurrence_from_string(recurrence)), parse_rats(initial),
                              upto);
            std::vector<std::string> out;
            out.reserve(seq.size());
            for (const auto& v : seq) out.push_back(to_string(v));
            return out;
        },
        py::arg("recurrence"), py::arg("initial"), py::arg("upto"),
        "Extend a builtin recurrence (thm1 | thm2 | thm3 | apery_z2) exactly.");

    m.def(
        "verify",
        [](const std::string& recurrence, const std::vector<std::string>& seq, long n_lo,
           long n_hi) {
            auto res = verify(builtin(recurrence_from_string(recurrence)), parse_rats(seq), n_lo,
                              n_hi);
            return py::make_tuple(res.ok, res.first_failure);
        },
        py::arg("recurrence"), py::arg("seq"), py::arg("n_lo"), py::arg("n_hi"),
        "Exact recurrence check; returns (ok, first_failure).");

    m.def(
        "char_roots",
        [](const std::string& recurrence, long digits) {
            auto roots = char_roots(builtin(recurrence_from_string(recurrence)), digits);
            py::list out;
            for (const auto& r : roots) {
                py::dict d;
                d["re"] = r.re.to_string(digits);
                d["im"] = r.im.to_string(digits);
                d["abs"] = r.abs().to_string(digits);
                out.append(std::move(d));
            }
            return out;
        },
        py::arg("recurrence"), py::arg("digits") = 20,
        "Characteristic roots, modulus descending.");

    m.def(
        "double_integral",
        [](long n, const std::string& z, double tol) {
            return double_integral(n, parse_rat(z), tol);
        },
        py::arg("n"), py::arg("z"), py::arg("tol") = 1e-9);

    m.def("lcm_upto", [](long n) { return to_string(Rat(lcm_upto(n))); }, py::arg("n"));
    m.def("phi_tilde", [](long n) { return to_string(Rat(phi_tilde(n))); }, py::arg("n"));
    m.def("digits_for_n",
          [](const std::string& construction, long n) {
              return digits_for_n(construction_from_string(construction), n);
          },
          py::arg("construction"), py::arg("n"));
}
