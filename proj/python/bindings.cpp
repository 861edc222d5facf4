#include "realhurwitz/cli.hpp"
#include "realhurwitz/completed.hpp"
#include "realhurwitz/hurwitz.hpp"
#include "realhurwitz/realsign.hpp"
#include "realhurwitz/symgrp.hpp"
#include "realhurwitz/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace realhurwitz;

namespace {

py::object fraction(const Rational& x) {
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(to_string(x));
}

Partition to_partition(const std::vector<int>& parts) { return Partition(parts); }

Profiles to_profiles(const std::vector<std::vector<int>>& ps) {
    Profiles out;
    for (const auto& p : ps) out.push_back(to_partition(p));
    return out;
}

py::tuple as_tuple(const Partition& p) { return py::cast(std::vector<int>(p.parts())); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Complex, signed Real and Doublet Hurwitz numbers.";

    static py::exception<ValidationError> validation_error(m, "ValidationError", PyExc_ValueError);
    static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
    static py::exception<BudgetExceeded> budget_exceeded(m, "BudgetExceeded", PyExc_RuntimeError);
    static py::exception<ResourceError> resource_error(m, "ResourceError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ValidationError& e) {
            py::set_error(validation_error, e.what());
        } catch (const ParseError& e) {
            py::set_error(parse_error, e.what());
        } catch (const BudgetExceeded& e) {
            py::set_error(budget_exceeded, e.what());
        } catch (const ResourceError& e) {
            py::set_error(resource_error, e.what());
        }
    });

    m.def(
        "complex_number",
        [](int g, int d, const std::vector<std::vector<int>>& profiles, bool connected) {
            Profiles ps = to_profiles(profiles);
            return fraction(connected ? complex_connected(g, d, ps) : complex_disconnected(g, d, ps));
        },
        py::arg("genus"), py::arg("degree"), py::arg("profiles") = std::vector<std::vector<int>>{},
        py::arg("connected") = false);

    m.def(
        "real_number",
        [](int g, int d, const std::vector<std::vector<int>>& profiles, bool connected, const std::string& via,
           int handles, double budget) {
            Profiles ps = to_profiles(profiles);
            if (via == "formula") return fraction(connected ? real_connected(g, d, ps) : real_disconnected(g, d, ps));
            if (via == "operator") {
                if (!connected) return fraction(real_disconnected_via_operator(g, d, ps, handles));
                return fraction(connected_from_disconnected(d, ps, 0, [&](int s, const Profiles& sub, std::uint32_t) {
                    return real_disconnected_via_operator(g, s, sub, handles);
                }));
            }
            if (via == "oracle") {
                OracleQuery q;
                q.handles = handles;
                q.crosscaps = g - 2 * handles + 1;
                q.degree = d;
                q.profiles = ps;
                q.transitive_only = connected;
                q.budget = budget;
                return fraction(oracle_real_disconnected(q));
            }
            throw py::value_error("via must be 'formula', 'operator' or 'oracle'");
        },
        py::arg("genus"), py::arg("degree"), py::arg("profiles") = std::vector<std::vector<int>>{},
        py::arg("connected") = false, py::arg("via") = "formula", py::arg("handles") = 0,
        py::arg("budget") = kDefaultOracleBudget);

    m.def(
        "doublet_number",
        [](int g, int d, const std::vector<std::vector<int>>& profiles, const std::vector<int>& marking,
           bool connected) { return fraction(doublet(g, d, to_profiles(profiles), marking, connected)); },
        py::arg("genus"), py::arg("degree"), py::arg("profiles"), py::arg("marking") = std::vector<int>{},
        py::arg("connected") = false, "Marking indices are 0-based.");

    m.def(
        "doublet_contribution",
        [](int g, int d, const std::vector<std::vector<int>>& profiles, const std::vector<int>& choice) {
            return fraction(doublet_contribution(g, d, to_profiles(profiles), choice));
        },
        py::arg("genus"), py::arg("degree"), py::arg("profiles"), py::arg("choice") = std::vector<int>{});

    m.def(
        "completed_number",
        [](int g, int d, const std::vector<std::vector<int>>& profiles, const std::vector<int>& cycles, bool real,
           bool connected) {
            Profiles ps = to_profiles(profiles);
            if (real)
                return fraction(connected ? real_completed_connected(g, d, ps, cycles)
                                          : real_completed_disconnected(g, d, ps, cycles));
            return fraction(connected ? complex_completed_connected(g, d, ps, cycles)
                                      : complex_completed_disconnected(g, d, ps, cycles));
        },
        py::arg("genus"), py::arg("degree"), py::arg("profiles"), py::arg("cycles"), py::arg("real") = true,
        py::arg("connected") = false);

    m.def(
        "real_group_number",
        [](const std::string& path, int g, const std::vector<std::string>& classes, bool complex) {
            GroupHandle G = make_group(load_group_spec_file(path));
            ClassList cls;
            for (const auto& id : classes) cls.push_back(G->class_index(id));
            return fraction(complex ? complex_disconnected_generic(G, g, cls) : real_disconnected_generic(G, g, cls));
        },
        py::arg("group_file"), py::arg("genus"), py::arg("classes") = std::vector<std::string>{},
        py::arg("complex") = false);

    m.def(
        "character_table",
        [](int d) {
            SymCharTable t = sym_char_table(d);
            py::list shapes, rows;
            for (std::size_t mu = 0; mu < t.size(); ++mu) {
                shapes.append(as_tuple(t.partitions()[mu]));
                std::vector<std::int64_t> row;
                for (std::size_t c = 0; c < t.size(); ++c) row.push_back(t(mu, c));
                rows.append(py::cast(row));
            }
            return py::make_tuple(shapes, rows);
        },
        py::arg("degree"), "Returns (shapes, rows); rows are irreducibles, columns classes, both in shape order.");

    m.def(
        "sfs",
        [](int d) {
            SymCharTable t = sym_char_table(d);
            py::dict out;
            for (std::size_t mu = 0; mu < t.size(); ++mu) out[as_tuple(t.partitions()[mu])] = fraction(sfs_indicator(t.row(mu), t));
            return out;
        },
        py::arg("degree"));

    m.def(
        "completed_cycle",
        [](int k) {
            py::dict out;
            for (const auto& [nu, q] : completed_cycle(k).coefficients) out[as_tuple(nu)] = fraction(q);
            return out;
        },
        py::arg("k"));

    m.def(
        "local_sign",
        [](const std::string& eps, const std::string& tau, int degree) {
            BoundaryMonodromy bm(Permutation::parse_cycles(eps, degree), Permutation::parse_cycles(tau, degree));
            return py::make_tuple(local_sign(bm), is_contributing(bm));
        },
        py::arg("eps"), py::arg("tau"), py::arg("degree"), "Returns (sign, contributing).");

    m.def(
        "verify",
        [](const std::string& suite, int max_degree) {
            std::vector<CheckLine> lines;
            if (suite == "degeneration") lines = verify_degeneration_suite(max_degree);
            else if (suite == "oracle") lines = verify_oracle_suite(max_degree);
            else if (suite == "sfs") lines = verify_sfs_suite(max_degree);
            else if (suite == "frobenius") lines = verify_frobenius_suite(max_degree);
            else if (suite == "completed") lines = verify_completed_suite(max_degree);
            else throw py::value_error("unknown suite '" + suite + "'");
            std::vector<std::string> out;
            for (const auto& l : lines) out.push_back(format_line(l));
            return out;
        },
        py::arg("suite"), py::arg("max_degree") = 4);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs one CLI command in-process; returns (exit_code, stdout, stderr).");
}
