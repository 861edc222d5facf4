#include "realhurwitz/cli.hpp"

#include "realhurwitz/completed.hpp"
#include "realhurwitz/frobenius.hpp"
#include "realhurwitz/hurwitz.hpp"
#include "realhurwitz/realsign.hpp"
#include "realhurwitz/symgrp.hpp"
#include "realhurwitz/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

namespace realhurwitz::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kVersion = "1.0.0";

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    int genus = 0;
    int degree = 0;
    std::string profiles;
    bool connected = false;
    std::string cycles;
    std::string via = "formula";
    int handles = 0;
    double budget = kDefaultOracleBudget;
    std::string group;
    std::string classes;
    bool complex_variant = false;
    std::string marking;
    int k = 1;
    std::string eps;
    std::string tau;
    int point_count = 0;
    std::string suite;
    int max_degree = 0;
    bool json = false;
    bool strict = false;
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    if (text.empty()) return out;
    std::string cur;
    for (char ch : text) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

Profiles parse_profiles(const std::string& text) {
    Profiles out;
    try {
        for (const auto& piece : split(text, ';')) out.push_back(parse_partition(piece));
    } catch (const ParseError& e) {
        throw UsageError(std::string("--profiles: ") + e.what());
    }
    return out;
}

std::vector<int> parse_int_list(const std::string& text, const char* flag) {
    std::vector<int> out;
    for (const auto& piece : split(text, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(piece, &used);
            if (used != piece.size()) throw std::invalid_argument(piece);
            out.push_back(v);
        } catch (const std::exception&) {
            throw UsageError(std::string(flag) + ": invalid integer '" + piece + "'");
        }
    }
    return out;
}

Json profiles_json(const Profiles& ps) {
    Json arr = Json::array();
    for (const auto& p : ps) arr.push_back(to_string(p));
    return arr;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
    return s;
}

GroupHandle load_group(const std::string& path) {
    try {
        return make_group(load_group_spec_file(path));
    } catch (const ParseError& e) {
        throw ValidationError(std::string("group spec: ") + e.what());
    }
}

class Runner {
public:
    Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

    std::string fmt(const Rational& x) const { return to_string(x, o_.strict); }

    void emit(const std::string& command, Json query, const Json& value, Json metadata, const std::string& text) {
        if (o_.json) {
            Json doc;
            query["command"] = command;
            if (o_.strict) query["strict_rational"] = true;
            Json ordered;
            ordered["command"] = command;
            for (auto it = query.begin(); it != query.end(); ++it)
                if (it.key() != "command") ordered[it.key()] = it.value();
            doc["query"] = ordered;
            doc["value"] = value;
            metadata["library_version"] = kVersion;
            metadata["exact"] = true;
            doc["metadata"] = metadata;
            out_ << doc.dump(2) << '\n';
        } else {
            out_ << text << '\n';
        }
    }

    int hurwitz_number(const std::string& command) {
        Profiles ps = parse_profiles(o_.profiles);
        std::vector<int> cycles = parse_int_list(o_.cycles, "--cycles");
        Json query;
        query["genus"] = o_.genus;
        query["degree"] = o_.degree;
        query["profiles"] = profiles_json(ps);
        query["connected"] = o_.connected;
        if (!cycles.empty()) query["cycles"] = cycles;
        Json meta;
        meta["connectivity"] = o_.connected ? "connected" : "disconnected";
        Rational value;
        if (command == "complex") {
            if (o_.via != "formula") throw UsageError("--via is only available for real");
            meta["variant"] = "complex";
            meta["method"] = "formula";
            if (cycles.empty())
                value = o_.connected ? complex_connected(o_.genus, o_.degree, ps) : complex_disconnected(o_.genus, o_.degree, ps);
            else
                value = o_.connected ? complex_completed_connected(o_.genus, o_.degree, ps, cycles)
                                     : complex_completed_disconnected(o_.genus, o_.degree, ps, cycles);
        } else {
            query["via"] = o_.via;
            meta["variant"] = "real";
            meta["method"] = o_.via;
            if (!cycles.empty() && o_.via != "formula")
                throw UsageError("--cycles can only be combined with --via formula");
            if (o_.via != "formula") {
                query["handles"] = o_.handles;
                int k = o_.genus - 2 * o_.handles;
                if (o_.handles < 0 || k < 0) throw UsageError("--handles must satisfy 0 <= 2h <= genus");
                meta["crosscaps"] = k + 1;
            }
            if (o_.via == "formula") {
                if (cycles.empty())
                    value = o_.connected ? real_connected(o_.genus, o_.degree, ps) : real_disconnected(o_.genus, o_.degree, ps);
                else
                    value = o_.connected ? real_completed_connected(o_.genus, o_.degree, ps, cycles)
                                         : real_completed_disconnected(o_.genus, o_.degree, ps, cycles);
            } else if (o_.via == "operator") {
                int h = o_.handles;
                if (o_.connected) {
                    int g = o_.genus;
                    value = connected_from_disconnected(o_.degree, ps, 0, [g, h](int s, const Profiles& sub, std::uint32_t) {
                        return real_disconnected_via_operator(g, s, sub, h);
                    });
                } else {
                    value = real_disconnected_via_operator(o_.genus, o_.degree, ps, h);
                }
            } else {
                for (const auto& p : ps)
                    if (p.size() != o_.degree)
                        throw ValidationError("profile " + to_string(p) + " is not a partition of " +
                                              std::to_string(o_.degree));
                OracleQuery q;
                q.handles = o_.handles;
                q.crosscaps = o_.genus - 2 * o_.handles + 1;
                q.degree = o_.degree;
                q.profiles = ps;
                q.transitive_only = o_.connected;
                q.budget = o_.budget;
                OracleResult r = oracle_count(q);
                value = r.value();
                meta["positive_part"] = fmt(r.positive_part());
                meta["negative_part"] = fmt(r.negative_part());
            }
        }
        emit(command, query, fmt(value), meta, fmt(value));
        return kSuccess;
    }

    int real_generic() {
        GroupHandle G = load_group(o_.group);
        ClassList cls;
        std::vector<std::string> ids = split(o_.classes, ';');
        for (const auto& id : ids) cls.push_back(G->class_index(id));
        Rational value = o_.complex_variant ? complex_disconnected_generic(G, o_.genus, cls)
                                            : real_disconnected_generic(G, o_.genus, cls);
        Json query;
        query["group"] = o_.group;
        query["genus"] = o_.genus;
        query["classes"] = ids;
        query["complex"] = o_.complex_variant;
        Json meta;
        meta["group_order"] = G->order().get_str();
        meta["variant"] = o_.complex_variant ? "complex" : "real";
        emit("real-g", query, fmt(value), meta, fmt(value));
        return kSuccess;
    }

    int doublet_number() {
        Profiles ps = parse_profiles(o_.profiles);
        std::vector<int> marking;
        for (int i : parse_int_list(o_.marking, "--marking")) marking.push_back(i - 1);
        Rational value = doublet(o_.genus, o_.degree, ps, marking, o_.connected);
        Json query;
        query["genus"] = o_.genus;
        query["degree"] = o_.degree;
        query["profiles"] = profiles_json(ps);
        query["marking"] = parse_int_list(o_.marking, "--marking");
        query["connected"] = o_.connected;
        Json meta;
        meta["connectivity"] = o_.connected ? "connected" : "disconnected";
        emit("doublet", query, fmt(value), meta, fmt(value));
        return kSuccess;
    }

    int chartab() {
        SymCharTable t = sym_char_table(o_.degree);
        std::vector<std::string> names;
        for (const auto& p : t.partitions()) names.push_back(to_string(p));
        std::ostringstream text;
        text << "classes: " << join(names, " ");
        Json rows = Json::array();
        for (std::size_t mu = 0; mu < t.size(); ++mu) {
            std::vector<std::string> vals;
            Json jvals = Json::array();
            for (std::size_t c = 0; c < t.size(); ++c) {
                vals.push_back(std::to_string(t(mu, c)));
                jvals.push_back(t(mu, c));
            }
            text << '\n' << names[mu] << ": " << join(vals, " ");
            rows.push_back(Json{{"irreducible", names[mu]}, {"values", jvals}});
        }
        Json query;
        query["degree"] = o_.degree;
        Json value;
        value["classes"] = names;
        value["rows"] = rows;
        emit("chartab", query, value, Json::object(), text.str());
        return kSuccess;
    }

    int sfs() {
        GroupHandle G = o_.group.empty() ? symmetric_group(o_.degree) : load_group(o_.group);
        Json query;
        if (o_.group.empty())
            query["degree"] = o_.degree;
        else
            query["group"] = o_.group;
        std::vector<std::string> lines;
        Json value = Json::array();
        for (std::size_t rho = 0; rho < G->irrep_count(); ++rho) {
            Rational s = sfs_indicator(G->irreducibles()[rho].character, *G);
            const std::string& id = G->irreducibles()[rho].id;
            lines.push_back(id + ": " + fmt(s));
            value.push_back(Json{{"irreducible", id}, {"sfs", fmt(s)}});
        }
        emit("sfs", query, value, Json::object(), join(lines, "\n"));
        return kSuccess;
    }

    int completed() {
        if (o_.k < 1) throw ValidationError("--k must be positive");
        CompletedCycle cc = completed_cycle(o_.k);
        Json value = Json::array();
        for (const auto& [nu, q] : cc.coefficients)
            value.push_back(Json{{"partition", to_string(nu)}, {"q", fmt(q)}});
        Json query;
        query["k"] = o_.k;
        emit("completed-cycle", query, value, Json::object(), cc.to_string(o_.strict));
        return kSuccess;
    }

    int localsign() {
        int d = o_.point_count;
        if (d == 0) {
            for (const std::string* s : {&o_.eps, &o_.tau}) {
                std::string digits;
                for (char ch : *s + " ") {
                    if (std::isdigit(static_cast<unsigned char>(ch))) {
                        digits += ch;
                    } else if (!digits.empty()) {
                        d = std::max(d, std::stoi(digits));
                        digits.clear();
                    }
                }
            }
        }
        Permutation e, t;
        try {
            e = Permutation::parse_cycles(o_.eps, d);
            t = Permutation::parse_cycles(o_.tau, d);
        } catch (const ParseError& ex) {
            throw UsageError(ex.what());
        }
        BoundaryMonodromy bm(e, t);
        LocalInvariants inv = decompose(bm);
        int sign = local_sign(inv);
        bool contributing = is_contributing(inv);
        std::vector<std::string> parts;
        Json jinv = Json::array();
        for (int i = 1; i <= d; ++i) {
            if (!inv.m[i]) continue;
            parts.push_back("i=" + std::to_string(i) + " m=" + std::to_string(inv.m[i]) + " k=" + std::to_string(inv.k[i]) +
                            " a=" + std::to_string(inv.a[i]) + " b=" + std::to_string(inv.b[i]));
            jinv.push_back(Json{{"i", i}, {"m", inv.m[i]}, {"k", inv.k[i]}, {"a", inv.a[i]}, {"b", inv.b[i]}});
        }
        Json query;
        query["eps"] = o_.eps;
        query["tau"] = o_.tau;
        query["points"] = d;
        Json value;
        value["sign"] = sign;
        value["contributing"] = contributing;
        value["invariants"] = jinv;
        std::string text = std::to_string(sign) + "\ncontributing: " + (contributing ? "yes" : "no") +
                           "\ninvariants: " + join(parts, "; ");
        emit("localsign", query, value, Json::object(), text);
        return kSuccess;
    }

    int verify() {
        std::vector<CheckLine> lines;
        int dmax = o_.max_degree;
        if (o_.suite == "degeneration")
            lines = verify_degeneration_suite(dmax ? dmax : 4);
        else if (o_.suite == "oracle")
            lines = verify_oracle_suite(dmax ? dmax : 4);
        else if (o_.suite == "sfs")
            lines = verify_sfs_suite(dmax ? dmax : 7);
        else if (o_.suite == "frobenius")
            lines = verify_frobenius_suite(dmax ? dmax : 5);
        else
            lines = verify_completed_suite(dmax ? dmax : 6);
        std::vector<std::string> text;
        Json value = Json::array();
        for (const auto& l : lines) {
            text.push_back(format_line(l));
            Json j{{"name", l.name}, {"passed", l.passed}, {"cases", l.cases}};
            if (!l.passed) {
                j["failing_case"] = l.failing_case;
                j["lhs"] = l.lhs;
                j["rhs"] = l.rhs;
            }
            value.push_back(j);
        }
        Json query;
        query["suite"] = o_.suite;
        if (dmax) query["max_degree"] = dmax;
        emit("verify", query, value, Json::object(), join(text, "\n"));
        return all_passed(lines) ? kSuccess : kVerificationFailed;
    }

private:
    const Options& o_;
    std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact Complex, signed Real and Doublet Hurwitz numbers", "realhurwitz"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", o.json, "Emit a JSON document {query, value, metadata}");
    app.add_flag("--strict-rational", o.strict, "Always print rationals as p/q, including integers");

    auto number_options = [&](CLI::App* sub) {
        sub->add_option("--genus", o.genus, "Genus of the target")->required()->check(CLI::NonNegativeNumber);
        sub->add_option("--degree", o.degree, "Degree of the cover")->required()->check(CLI::NonNegativeNumber);
        sub->add_option("--profiles", o.profiles, "Ramification profiles, e.g. \"3;2,1\"");
        sub->add_flag("--connected", o.connected, "Connected numbers via the logarithm of the generating series");
    };
    CLI::App* complex = app.add_subcommand("complex", "Complex Hurwitz number");
    number_options(complex);
    complex->add_option("--cycles", o.cycles, "Completed-cycle insertions, e.g. \"1,3\"");

    CLI::App* real = app.add_subcommand("real", "Signed Real Hurwitz number");
    number_options(real);
    real->add_option("--cycles", o.cycles, "Completed-cycle insertions, e.g. \"1,3\"");
    real->add_option("--via", o.via, "Computation path")->check(CLI::IsMember({"formula", "operator", "oracle"}));
    real->add_option("--handles", o.handles, "Handles h in g = 2h + k for the operator and oracle paths");
    real->add_option("--budget", o.budget, "Maximum number of tuples the oracle may enumerate");

    CLI::App* real_g = app.add_subcommand("real-g", "(G, eps) Real Hurwitz number from a group spec file");
    real_g->add_option("--group", o.group, "Group spec file")->required();
    real_g->add_option("--genus", o.genus, "Genus of the target")->required()->check(CLI::NonNegativeNumber);
    real_g->add_option("--classes", o.classes, "Class ids separated by ';'");
    real_g->add_flag("--complex", o.complex_variant, "Compute the (G, eps) Complex number instead");

    CLI::App* dbl = app.add_subcommand("doublet", "Doublet Hurwitz number");
    number_options(dbl);
    dbl->add_option("--marking", o.marking, "1-based profile indices in the marking, e.g. \"1,3\"");

    CLI::App* chartab = app.add_subcommand("chartab", "Character table of S_d");
    chartab->add_option("--degree", o.degree, "Degree d")->required()->check(CLI::NonNegativeNumber);

    CLI::App* sfs = app.add_subcommand("sfs", "Signed Frobenius-Schur indicators");
    auto* sfs_degree = sfs->add_option("--degree", o.degree, "Degree d of S_d")->check(CLI::NonNegativeNumber);
    auto* sfs_group = sfs->add_option("--group", o.group, "Group spec file");
    sfs_degree->excludes(sfs_group);
    sfs->require_option(1);

    CLI::App* completed = app.add_subcommand("completed-cycle", "Coefficients of a completed cycle");
    completed->add_option("--k", o.k, "Order k")->required();

    CLI::App* localsign = app.add_subcommand("localsign", "Local sign at a fixed circle");
    localsign->add_option("--eps", o.eps, "Monodromy in cycle notation")->required();
    localsign->add_option("--tau", o.tau, "Involution in cycle notation")->required();
    localsign->add_option("--points", o.point_count, "Fiber size (default: largest point mentioned)");

    CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", o.suite, "Suite name")
        ->required()
        ->check(CLI::IsMember({"degeneration", "oracle", "sfs", "frobenius", "completed"}));
    verify->add_option("--max-degree", o.max_degree, "Largest degree (or k for completed)")->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        Runner r(o, out);
        if (*complex) return r.hurwitz_number("complex");
        if (*real) return r.hurwitz_number("real");
        if (*real_g) return r.real_generic();
        if (*dbl) return r.doublet_number();
        if (*chartab) return r.chartab();
        if (*sfs) return r.sfs();
        if (*completed) return r.completed();
        if (*localsign) return r.localsign();
        if (*verify) return r.verify();
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return kBudgetExceeded;
    } catch (const ResourceError& e) {
        err << "resource limit: " << e.what() << '\n';
        return kBudgetExceeded;
    } catch (const ValidationError& e) {
        err << "validation error: " << e.what() << '\n';
        return kValidationError;
    } catch (const ParseError& e) {
        err << "validation error: " << e.what() << '\n';
        return kValidationError;
    }
    return kUsageError;
}

std::vector<std::string> args_from_json(const std::string& document) {
    Json doc = Json::parse(document);
    const Json& q = doc.contains("query") ? doc["query"] : doc;
    std::vector<std::string> args{q.at("command").get<std::string>()};
    auto str = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    for (auto it = q.begin(); it != q.end(); ++it) {
        const std::string& key = it.key();
        const Json& v = it.value();
        if (key == "command" || key == "strict_rational") continue;
        if (v.is_boolean()) {
            if (v.get<bool>()) args.push_back("--" + key);
            continue;
        }
        std::string flag = key;
        std::replace(flag.begin(), flag.end(), '_', '-');
        if (key == "points") flag = "points";
        args.push_back("--" + flag);
        if (v.is_array()) {
            std::vector<std::string> items;
            for (const auto& x : v) items.push_back(str(x));
            std::string sep = (key == "profiles" || key == "classes") ? ";" : ",";
            args.push_back(join(items, sep));
        } else {
            args.push_back(str(v));
        }
    }
    args.push_back("--json");
    if (q.contains("strict_rational") && q["strict_rational"].get<bool>()) args.push_back("--strict-rational");
    return args;
}

}  // namespace realhurwitz::cli
