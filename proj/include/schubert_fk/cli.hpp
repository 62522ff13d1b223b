#pragma once

#include "schubert_fk/verify.hpp"

#include <CLI11.hpp>

#include <ostream>

namespace schubert_fk::cli {

enum class Format { text, json, tsv };

/// Integers print as JSON numbers when they fit in 64 bits, else as decimal strings.
inline json integer_json(const Integer& c) {
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(c);
    return to_string(c);
}

inline json element_json(const FKElement& el) {
    json a = json::array();
    for (const auto& [w, c] : el) a.push_back({{"word", to_string(w)}, {"coeff", integer_json(c)}});
    return a;
}

inline void print_element(std::ostream& out, const FKElement& el, Format f) {
    if (f == Format::json) {
        out << element_json(el).dump() << '\n';
        return;
    }
    if (f == Format::tsv) {
        out << "word\tcoeff\n";
        for (const auto& [w, c] : el) out << to_string(w) << '\t' << c << '\n';
        return;
    }
    out << to_string(el) << '\n';
}

inline json polynomial_json(const Polynomial& p) {
    json j = json::object();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        std::string m = schubert_fk::detail::monomial_text(it->first);
        j[m.empty() ? "1" : m] = integer_json(it->second);
    }
    return j;
}

inline const std::map<std::string, Format>& format_names() {
    static const std::map<std::string, Format> m{{"text", Format::text}, {"json", Format::json}, {"tsv", Format::tsv}};
    return m;
}

/// Runs one invocation; args excludes the program name. Returns the exit status.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Schubert calculus in the Fomin-Kirillov algebra", "schubert-fk"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Help for every subcommand");

    Format format = Format::json;
    bool format_given = false;
    auto add_format = [&](CLI::App* sub, std::initializer_list<const char*> allowed) {
        std::map<std::string, Format> m;
        for (const char* a : allowed) m.emplace(a, format_names().at(a));
        sub->add_option_function<Format>("--format", [&](const Format& f) { format = f; format_given = true; }, "Output format")
            ->transform(CLI::CheckedTransformer(m, CLI::ignore_case));
    };
    auto positive = CLI::PositiveNumber;

    std::string perm, u_text, v_text, kind = "rows", suite = "all";
    int n = 0, k = 0, s = 0, t = 0, a = 0, b = 0, m = 0, size = 0, count = 0, max_n = 5;
    bool timing = false;

    auto* schubert = app.add_subcommand("schubert", "Schubert polynomial of a permutation");
    schubert->add_option("--perm", perm, "One-line notation, e.g. \"2 4 1 3\"")->required();
    add_format(schubert, {"text", "json"});

    auto* lr = app.add_subcommand("lr", "Structure constants c_{uv}^w in H*(Fl_n)");
    auto* gw = app.add_subcommand("gw", "3-point Gromov-Witten invariants of Fl_n");
    for (auto* sub : {lr, gw}) {
        sub->add_option("--u", u_text, "Permutation u")->required();
        sub->add_option("--v", v_text, "Permutation v")->required();
        sub->add_option("--n", n, "Ambient n")->required()->check(positive);
    }

    auto* hook = app.add_subcommand("hook-expand", "Forest expansion of the hook (s,1^{t-1}) at theta_1..theta_k");
    hook->add_option("--s", s, "Arm length plus one")->required()->check(positive);
    hook->add_option("--t", t, "Leg length plus one")->required()->check(positive);

    auto* rect = app.add_subcommand("rect-expand", "Expansion of a full-width or full-height rectangle");
    rect->add_option("--kind", kind, "rows: (n-k)^count, columns: count^k")->check(CLI::IsMember({"rows", "columns"}));
    rect->add_option("--count", count, "Number of rows or columns")->required()->check(positive);

    auto* two = app.add_subcommand("twobytwo", "Expansion of s_(2,2)(theta_1..theta_k)");

    auto* ledger = app.add_subcommand("ledger", "Class ledger of s_(b,1^a) h_1 - s_(b,1^(a+1)) - s_(b+1,1^a)");
    ledger->add_option("--a", a, "a >= 1")->required()->check(positive);
    ledger->add_option("--b", b, "b >= 2")->required()->check(CLI::Range(2, 64));

    for (auto* sub : {hook, rect, two, ledger}) {
        sub->add_option("--k", k, "Rows of the rectangle")->required()->check(positive);
        sub->add_option("--n", n, "Ambient n")->required()->check(positive);
    }
    for (auto* sub : {hook, rect, two}) add_format(sub, {"text", "json", "tsv"});
    add_format(ledger, {"json", "tsv"});

    auto* forests = app.add_subcommand("forests", "Forest diagrams with a given number of boxes");
    forests->add_option("--k", k, "Rows")->required()->check(positive);
    forests->add_option("--m", m, "Columns")->required()->check(positive);
    forests->add_option("--size", size, "Number of boxes")->required()->check(CLI::NonNegativeNumber);
    add_format(forests, {"text", "json"});

    auto* ebasis = app.add_subcommand("ebasis", "Schubert polynomial in the standard elementary monomials");
    ebasis->add_option("--perm", perm, "One-line notation")->required();
    ebasis->add_option("--n", n, "Ambient n")->required()->check(positive);

    auto* verify = app.add_subcommand("verify", "Run theorem checks and stream JSON reports");
    verify->add_option("--suite", suite, "Check family")->check(CLI::IsMember(suite_names()));
    verify->add_option("--max-n", max_n, "Largest n swept")->check(CLI::Range(2, 7));
    verify->add_flag("--timing", timing, "Include wall time per report");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    auto* used = app.get_subcommands().front();
    auto fmt = [&](Format fallback) { return format_given ? format : fallback; };

    try {
        if (used == schubert) {
            auto p = schubert_poly(parse_permutation(perm));
            if (fmt(Format::text) == Format::json) out << polynomial_json(p).dump() << '\n';
            else out << to_string(p) << '\n';
        } else if (used == lr) {
            auto u = parse_permutation(u_text), v = parse_permutation(v_text);
            if (u.size() > n || v.size() > n) throw SizeMismatch("permutation longer than n");
            json j = json::object();
            for (const auto& [w, c] : flag_structure_constants(u, v, n)) j[to_string(w)] = integer_json(c);
            out << j.dump() << '\n';
        } else if (used == gw) {
            auto u = parse_permutation(u_text), v = parse_permutation(v_text);
            if (u.size() > n || v.size() > n) throw SizeMismatch("permutation longer than n");
            json j = json::object();
            for (const auto& [key, c] : gw_invariants(u.embed(n), v.embed(n), n))
                j[to_string(key.first)][q_monomial_key(key.second)] = integer_json(c);
            out << j.dump() << '\n';
        } else if (used == hook) {
            print_element(out, hook_expansion({s, t}, k, n), fmt(Format::json));
        } else if (used == rect) {
            auto rk = kind == "rows" ? RectangleKind::rows : RectangleKind::columns;
            print_element(out, rectangle_expansion(rk, count, k, n), fmt(Format::json));
        } else if (used == two) {
            print_element(out, two_by_two_expansion(k, n), fmt(Format::json));
        } else if (used == ledger) {
            auto L = hook_plus_box_ledger(a, b, k, n);
            if (fmt(Format::tsv) == Format::tsv) {
                out << "word\tnet\tforest\n";
                for (const auto& r : L.rows) out << to_string(r.word) << '\t' << r.net << '\t' << (r.forest_class ? 1 : 0) << '\n';
            } else {
                json rows = json::array();
                for (const auto& r : L.rows)
                    rows.push_back({{"word", to_string(r.word)}, {"net", integer_json(r.net)}, {"forest", r.forest_class}});
                out << json{{"lambda", to_string(L.lambda)}, {"rows", rows}}.dump() << '\n';
            }
        } else if (used == forests) {
            auto ds = enumerate_forests(k, m, size);
            if (fmt(Format::text) == Format::json) {
                json arr = json::array();
                for (const auto& d : ds)
                    arr.push_back({{"diagram", to_string(d)}, {"rows", d.rows()}, {"cols", d.cols()}, {"components", d.components()}});
                out << arr.dump() << '\n';
            } else {
                for (const auto& d : ds) out << to_string(d) << '\n';
            }
        } else if (used == ebasis) {
            auto w = parse_permutation(perm);
            if (w.size() > n) throw SizeMismatch("permutation longer than n");
            json j = json::object();
            for (const auto& [key, c] : expand_in_e_basis(schubert_poly(w), n)) j[to_string(key)] = integer_json(c);
            out << j.dump() << '\n';
        } else if (used == verify) {
            auto reports = run_tasks(suite_tasks(suite, max_n));
            bool ok = true;
            for (const auto& r : reports) {
                out << r.to_json(timing).dump() << '\n';
                ok = ok && r.pass;
            }
            return ok ? 0 : 1;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

} // namespace schubert_fk::cli
