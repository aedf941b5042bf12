#include "springer/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <ostream>

#include "CLI11.hpp"

#include "springer/braid.hpp"
#include "springer/geometry.hpp"
#include "springer/json_io.hpp"
#include "springer/match.hpp"
#include "springer/orbits.hpp"
#include "springer/series.hpp"
#include "springer/sigma.hpp"
#include "springer/suite.hpp"

namespace springer {

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\r\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"')
            q += '"';
        q += c;
    }
    return q + '"';
}

namespace {

// Largest N accepted by the enumerating subcommands; beyond this the output
// runs to millions of lines.
constexpr int max_enumeration_n = 40;
constexpr int max_series_degree = 2000;
constexpr int max_bivariate_degree = 400;

enum class Format { table, json, csv };

struct Rows {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> body;
};

void write_csv(std::ostream& out, const Rows& rows)
{
    const auto line = [&out](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            out << (i ? "," : "") << csv_field(cells[i]);
        out << "\r\n";
    };
    line(rows.header);
    for (const auto& r : rows.body)
        line(r);
}

void write_table(std::ostream& out, const Rows& rows)
{
    std::vector<std::size_t> width(rows.header.size());
    for (std::size_t i = 0; i < width.size(); ++i)
        width[i] = rows.header[i].size();
    for (const auto& r : rows.body) {
        for (std::size_t i = 0; i < r.size(); ++i)
            width[i] = std::max(width[i], r[i].size());
    }
    const auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i)
                s += "  ";
            s += cells[i];
            if (i + 1 < cells.size())
                s.append(width[i] - cells[i].size(), ' ');
        }
        out << s << '\n';
    };
    line(rows.header);
    for (const auto& r : rows.body)
        line(r);
}

void emit(std::ostream& out, Format f, const Json& j, const Rows& rows)
{
    switch (f) {
    case Format::json:
        out << j.dump(2) << '\n';
        break;
    case Format::csv:
        write_csv(out, rows);
        break;
    case Format::table:
        write_table(out, rows);
        break;
    }
}

std::string form_cell(OptionalForm f)
{
    return f ? std::string(to_string(*f)) : "";
}

std::string join(const std::vector<int>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::string half(int a)
{
    return a % 2 ? std::to_string(a) + "/2" : std::to_string(a / 2);
}

Partition parse_cli_partition(const std::string& text)
{
    return text == "-" ? Partition{} : parse_partition(text);
}

void require_range(const char* what, int v, int lo, int hi)
{
    if (v < lo || v > hi)
        throw DomainError(std::string(what) + " must lie in " + std::to_string(lo) + ".." +
                          std::to_string(hi) + ", got " + std::to_string(v));
}

std::vector<std::string> triple_cells(const Triple& t, const SupportLevel& s)
{
    return {t.nu().to_string(), t.mu1().to_string(), t.mu2().to_string(), form_cell(t.omega()),
            std::to_string(s.m), form_cell(s.omega)};
}

const std::vector<std::string> triple_header = {"nu", "mu1", "mu2", "omega", "support_m",
                                                "support_omega"};

Json checks_to_json(const std::vector<SuiteCheck>& checks)
{
    Json arr = Json::array();
    for (const auto& c : checks) {
        Json j;
        j["name"] = c.name;
        j["passed"] = c.passed;
        j["detail"] = c.detail;
        j["failures"] = c.failures;
        arr.push_back(std::move(j));
    }
    return arr;
}

Rows checks_to_rows(const std::vector<SuiteCheck>& checks)
{
    Rows rows{{"check", "result", "detail", "failures"}, {}};
    for (const auto& c : checks)
        rows.body.push_back({c.name, c.passed ? "pass" : "FAIL", c.detail,
                             std::to_string(c.failures.size())});
    return rows;
}

int cap_from_env()
{
    const char* raw = std::getenv("SPRINGER_MAX_N");
    if (raw == nullptr || *raw == '\0')
        return 0;
    std::size_t used = 0;
    int cap = 0;
    try {
        cap = std::stoi(raw, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != std::string(raw).size() || cap < 1)
        throw DomainError("SPRINGER_MAX_N must be a positive integer");
    return cap;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Nilpotent orbit and local system combinatorics for symmetric pairs of type (SL_N, SO_N)",
                 "springer"};
    app.require_subcommand(1, 1);

    const std::map<std::string, Format> format_names{
        {"table", Format::table}, {"json", Format::json}, {"csv", Format::csv}};
    Format format = Format::json;
    bool format_given = false;
    const auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format: table, json or csv")
            ->transform(CLI::CheckedTransformer(format_names))
            ->each([&](const std::string&) { format_given = true; });
    };
    const auto format_or = [&](Format fallback) { return format_given ? format : fallback; };

    int N = 0;
    int m = 0;
    std::string lambda_text;
    std::string form_text;
    std::optional<int> verify_n;
    std::optional<int> only_m;
    std::string kind;
    int max_degree = 0;
    std::string alpha_text;
    std::string beta_text;
    int tn = 0;
    std::optional<int> ti;
    std::optional<int> tj;
    bool support_table = false;

    auto* orbits = app.add_subcommand("orbits", "List the K-orbits of rank N with their local-system counts");
    orbits->add_option("N", N, "Rank")->required();
    add_format(orbits);

    auto* sigma = app.add_subcommand("sigma", "List the parameter set Sigma_N in canonical order");
    sigma->add_option("N", N, "Rank")->required();
    add_format(sigma);

    auto* match = app.add_subcommand("match", "Sigma_lambda for one orbit, with the distinguished triple flagged");
    match->add_option("LAMBDA", lambda_text, "Partition, e.g. 3,1,1")->required();
    match->add_option("--form", form_text, "I or II, required when every part is even");
    add_format(match);

    auto* verify = app.add_subcommand("verify", "Census and Sigma_lambda checks for one N, or the full regression suite");
    verify->add_option("N", verify_n, "Rank; omit to run the default suite");
    add_format(verify);

    auto* smallness = app.add_subcommand("smallness", "Fiber dimensions against the half-codimension bound");
    smallness->add_option("N", N, "Rank")->required();
    smallness->add_option("--m", only_m, "Restrict to one m");
    add_format(smallness);

    auto* series = app.add_subcommand("series", "Coefficients of the generating functions");
    series->add_option("--kind", kind, "one-plus, inv-one-minus, ratio or plk")
        ->required()
        ->check(CLI::IsMember({"one-plus", "inv-one-minus", "ratio", "plk"}));
    series->add_option("--max-degree", max_degree, "Truncation degree")->required();
    add_format(series);

    auto* factors = app.add_subcommand("factors", "Composition factors of the local system attached to chi_m");
    factors->add_option("N", N, "Rank")->required();
    factors->add_option("m", m, "Character index, 0 <= m <= N/2")->required();
    add_format(factors);

    auto* induce = app.add_subcommand("induce", "Induced orbit lambda_i = beta_i + 2 alpha_i");
    induce->add_option("ALPHA", alpha_text, "Partition, '-' for empty")->required();
    induce->add_option("BETA", beta_text, "Partition, '-' for empty")->required();
    induce->add_option("N", N, "Rank")->required();
    add_format(induce);

    auto* tilde = app.add_subcommand("tilde-support", "Support orbit for the tilde-E local systems");
    tilde->add_option("n", tn, "N = 2n+1")->required();
    tilde->add_option("i", ti, "Index i");
    tilde->add_option("j", tj, "Index j");
    tilde->add_flag("--table", support_table, "Tabulate every (i, j) by support orbit");
    add_format(tilde);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (orbits->parsed()) {
            require_range("N", N, 1, max_enumeration_n);
            const auto records = enumerate_orbits(N);
            Json j;
            j["N"] = N;
            j["orbit_count"] = records.size();
            j["local_system_total"] = big_to_json(census_count(N));
            j["orbits"] = Json::array();
            Rows rows{{"lambda", "form", "k", "local_systems"}, {}};
            for (const auto& r : records) {
                j["orbits"].push_back(orbit_record_to_json(r));
                rows.body.push_back({r.label.lambda().to_string(), form_cell(r.label.form()),
                                     std::to_string(r.distinct_sizes), r.local_system_count.str()});
            }
            emit(out, format_or(Format::json), j, rows);
            return exit_ok;
        }

        if (sigma->parsed()) {
            require_range("N", N, 1, max_enumeration_n);
            const auto triples = enumerate_sigma(N);
            Json j;
            j["N"] = N;
            j["count"] = triples.size();
            j["triples"] = Json::array();
            Rows rows{triple_header, {}};
            for (const auto& t : triples) {
                const auto s = support_level(t, N);
                j["triples"].push_back(triple_to_json(t, s));
                rows.body.push_back(triple_cells(t, s));
            }
            emit(out, format_or(Format::json), j, rows);
            return exit_ok;
        }

        if (match->parsed()) {
            OptionalForm form;
            if (!form_text.empty())
                form = parse_form(form_text);
            const OrbitLabel orbit(parse_partition(lambda_text), form);
            const auto entries = sigma_lambda(orbit);
            std::optional<Triple> distinguished;
            std::vector<std::string> problems;
            try {
                distinguished = distinguished_triple(orbit).triple;
            } catch (const ConjectureViolation& e) {
                problems.push_back(e.what());
                for (const auto& c : e.candidates())
                    problems.push_back("candidate " + c.to_string());
            }

            Json j;
            j["orbit"] = {{"lambda", partition_to_json(orbit.lambda())},
                          {"form", form_to_json(orbit.form())}};
            j["N"] = orbit.rank();
            j["local_systems"] = big_to_json(local_system_count(
                static_cast<int>(orbit.lambda().distinct_sizes()), orbit.form().has_value()));
            j["full_support"] = big_to_json(full_support_count(orbit));
            j["triples"] = Json::array();
            Rows rows{triple_header, {}};
            for (auto h : {"delta", "J", "balanced", "distinguished"})
                rows.header.push_back(h);
            for (const auto& e : entries) {
                const bool flag = distinguished && *distinguished == e.triple;
                auto t = triple_to_json(e.triple, e.support);
                t["delta"] = e.choice.delta;
                t["J"] = e.choice.J;
                t["balanced"] = e.choice.balanced;
                t["distinguished"] = flag;
                j["triples"].push_back(std::move(t));
                auto cells = triple_cells(e.triple, e.support);
                cells.push_back(join(e.choice.delta));
                cells.push_back(join(e.choice.J));
                cells.push_back(e.choice.balanced ? "yes" : "no");
                cells.push_back(flag ? "*" : "");
                rows.body.push_back(std::move(cells));
            }
            j["problems"] = problems;
            emit(out, format_or(Format::json), j, rows);
            for (const auto& p : problems)
                err << "match: " << p << '\n';
            return problems.empty() ? exit_ok : exit_failed;
        }

        if (verify->parsed()) {
            std::vector<SuiteCheck> checks;
            Json j;
            if (verify_n) {
                require_range("N", *verify_n, 1, max_enumeration_n);
                const auto census = verify_census(*verify_n);
                j["N"] = *verify_n;
                j["census"] = {{"by_orbits", big_to_json(census.by_orbits)},
                               {"by_d_e", big_to_json(census.by_d_e)},
                               {"by_series", big_to_json(census.by_series)}};
                checks = run_checks_for(*verify_n);
            } else {
                const int cap = cap_from_env();
                const auto bounds = SuiteBounds{}.capped(cap);
                j["N"] = nullptr;
                j["max_n_cap"] = cap ? Json(cap) : Json(nullptr);
                checks = run_default_suite(bounds);
            }
            const bool ok = std::all_of(checks.begin(), checks.end(),
                                        [](const SuiteCheck& c) { return c.passed; });
            j["passed"] = ok;
            j["checks"] = checks_to_json(checks);
            emit(out, format_or(Format::json), j, checks_to_rows(checks));
            for (const auto& c : checks) {
                for (const auto& f : c.failures)
                    err << c.name << ": " << f << '\n';
            }
            return ok ? exit_ok : exit_failed;
        }

        if (smallness->parsed()) {
            require_range("N", N, 2, 400);
            int lo = 1;
            int hi = N / 2;
            if (only_m) {
                require_range("m", *only_m, 1, N / 2);
                lo = hi = *only_m;
            }
            Json j;
            j["N"] = N;
            j["rows"] = Json::array();
            Rows rows{{"m", "j", "fiber_dim", "half_codim", "pass"}, {}};
            bool ok = true;
            for (int mm = lo; mm <= hi; ++mm) {
                const auto report = smallness_report(mm, N);
                ok = ok && report.passed();
                for (const auto& r : report.rows) {
                    j["rows"].push_back({{"m", mm},
                                         {"j", r.j},
                                         {"fiber_dim", r.fiber_dim},
                                         {"codim", r.codim},
                                         {"half_codim", half(r.codim)},
                                         {"pass", r.passes()}});
                    rows.body.push_back({std::to_string(mm), std::to_string(r.j),
                                         std::to_string(r.fiber_dim), half(r.codim),
                                         r.passes() ? "true" : "false"});
                }
            }
            j["passed"] = ok;
            emit(out, format_or(Format::csv), j, rows);
            return ok ? exit_ok : exit_failed;
        }

        if (series->parsed()) {
            require_range("max-degree", max_degree, 0,
                          kind == "plk" ? max_bivariate_degree : max_series_degree);
            Json j;
            j["kind"] = kind;
            j["max_degree"] = max_degree;
            Rows rows;
            if (kind == "plk") {
                const auto b = bivariate_plk(max_degree);
                rows.header = {"l", "k", "coefficient"};
                j["coefficients"] = Json::array();
                for (int l = 0; l <= max_degree; ++l) {
                    Json row = Json::array();
                    for (int k = 0; k <= l; ++k) {
                        const auto c = b.coefficient(l, k);
                        row.push_back(big_to_json(c));
                        rows.body.push_back({std::to_string(l), std::to_string(k), c.str()});
                    }
                    j["coefficients"].push_back(std::move(row));
                }
            } else {
                const std::map<std::string, std::function<FormalSeries<BigInt>(int)>> builders{
                    {"one-plus", product_one_plus},
                    {"inv-one-minus", product_inv_one_minus},
                    {"ratio", product_ratio}};
                const auto s = builders.at(kind)(max_degree);
                rows.header = {"degree", "coefficient"};
                j["coefficients"] = Json::array();
                for (int d = 0; d <= max_degree; ++d) {
                    j["coefficients"].push_back(big_to_json(s[d]));
                    rows.body.push_back({std::to_string(d), s[d].str()});
                }
            }
            emit(out, format_or(Format::csv), j, rows);
            return exit_ok;
        }

        if (factors->parsed()) {
            require_range("N", N, 1, max_enumeration_n);
            const auto list = composition_factors(m, N);
            Json j = Json::array();
            Rows rows{{"mu1", "mu2", "split"}, {}};
            for (const auto& f : list) {
                j.push_back(factor_to_json(f));
                rows.body.push_back({f.mu1.to_string(), f.mu2.to_string(), form_cell(f.split)});
            }
            emit(out, format_or(Format::json), j, rows);
            return exit_ok;
        }

        if (induce->parsed()) {
            const auto alpha = parse_cli_partition(alpha_text);
            const auto beta = parse_cli_partition(beta_text);
            const auto lambda = induce_orbit(alpha, beta, N);
            Json j;
            j["alpha"] = partition_to_json(alpha);
            j["beta"] = partition_to_json(beta);
            j["N"] = N;
            j["lambda"] = partition_to_json(lambda);
            Rows rows{{"alpha", "beta", "N", "lambda"},
                      {{alpha.to_string(), beta.to_string(), std::to_string(N), lambda.to_string()}}};
            emit(out, format_or(Format::json), j, rows);
            return exit_ok;
        }

        if (tilde->parsed()) {
            require_range("n", tn, 0, 200);
            Json j;
            j["n"] = tn;
            Rows rows;
            if (support_table) {
                if (ti || tj)
                    throw DomainError("--table takes no i, j");
                rows.header = {"lambda", "occurrences"};
                j["supports"] = Json::array();
                for (const auto& [lambda, count] : tilde_e_support_table(tn)) {
                    j["supports"].push_back(
                        {{"lambda", partition_to_json(lambda)}, {"occurrences", count}});
                    rows.body.push_back({lambda.to_string(), std::to_string(count)});
                }
            } else {
                if (!ti || !tj)
                    throw DomainError("tilde-support needs both i and j, or --table");
                const auto label = tilde_e_label(tn, *ti, *tj);
                const auto lambda = tilde_e_support(tn, *ti, *tj);
                j["i"] = *ti;
                j["j"] = *tj;
                j["label"] = {{"nu", partition_to_json(label.nu())},
                              {"mu1", partition_to_json(label.mu1())},
                              {"mu2", partition_to_json(label.mu2())}};
                j["support"] = partition_to_json(lambda);
                rows.header = {"n", "i", "j", "label", "support"};
                rows.body.push_back({std::to_string(tn), std::to_string(*ti), std::to_string(*tj),
                                     label.to_string(), lambda.to_string()});
            }
            emit(out, format_or(Format::json), j, rows);
            return exit_ok;
        }
    } catch (const ConsistencyError& e) {
        err << "error: " << e.what() << '\n';
        return exit_failed;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace springer
