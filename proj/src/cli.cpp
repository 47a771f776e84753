#include "qtsym/cli.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "qtsym/expr.hpp"
#include "qtsym/macdonald.hpp"

namespace qtsym {

const char* const kPfCsvHeader = "n,rows,area,dinv,touch,sigma,ides";

Json expansion_to_json(const Expansion& e, Basis b) {
    Json terms = Json::array();
    for (const auto& [lam, c] : e) terms.push_back({{"partition", lam.parts()}, {"coeff", c.to_string()}});
    return {{"basis", basis_name(b)}, {"terms", terms}};
}

SymFun expansion_from_json(const Json& j, int trunc) {
    Basis b = parse_basis(j.at("basis").get<std::string>());
    Expansion coeffs;
    for (const auto& term : j.at("terms")) {
        Partition lam(term.at("partition").get<std::vector<int>>());
        QTRat c = parse_scalar(term.at("coeff").get<std::string>());
        if (!c.is_zero()) coeffs[lam] += c;
    }
    return basis_combine(b, coeffs, trunc);
}

Json fund_to_json(const FundVector& v) {
    Json terms = Json::array();
    for (const auto& [s, c] : v.coeffs) terms.push_back({{"subset", subset_elements(s)}, {"coeff", c.to_string()}});
    return {{"n", v.n}, {"basis", "F"}, {"terms", terms}};
}

Json report_to_json(const IdentityCheck& r) {
    Json params = Json::object();
    for (const auto& [k, v] : r.params.ints) params[k] = v;
    for (const auto& [k, v] : r.params.lists) params[k] = v;
    Json witness = nullptr;
    if (r.witness) witness = {{"term", r.witness->term}, {"lhs", r.witness->lhs}, {"rhs", r.witness->rhs}};
    Json j = {{"identity", r.name}, {"params", params}, {"verdict", r.verdict}, {"witness", witness},
              {"elapsed_ms", r.elapsed_ms}};
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

namespace {

std::string join(const std::vector<int>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + std::to_string(xs[i]);
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

}  // namespace

Json pf_to_json(const ParkingFunction& p, const PFStats& s) {
    Json rows = Json::array();
    for (int i = 0; i < p.size(); ++i) rows.push_back({p.a[i], p.v[i]});
    return {{"n", p.size()},     {"rows", rows},        {"area", s.area},
            {"dinv", s.dinv},    {"touch", s.touch.parts()}, {"sigma", s.sigma},
            {"ides", subset_elements(s.ides)}};
}

std::string pf_csv_row(const ParkingFunction& p, const PFStats& s) {
    std::ostringstream out;
    out << p.size() << ',' << p.rows_string() << ',' << s.area << ',' << s.dinv << ',' << join(s.touch.parts()) << ','
        << join(s.sigma) << ',' << join(subset_elements(s.ides));
    return out.str();
}

namespace {

enum class Format { json, csv, text };

struct Config {
    int trunc = kDefaultTrunc;
    int threads = 1;
    std::string format = "json";
    std::uint64_t seed = 1;

    Format fmt() const { return format == "csv" ? Format::csv : format == "text" ? Format::text : Format::json; }
    CheckOptions options() const {
        CheckOptions o;
        o.trunc = trunc;
        o.threads = threads;
        o.seed = seed;
        return o;
    }
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

void emit_expansion(std::ostream& out, const Expansion& e, Basis b, Format f) {
    switch (f) {
        case Format::json:
            out << expansion_to_json(e, b).dump() << '\n';
            break;
        case Format::csv:
            out << "partition,coeff\n";
            for (const auto& [lam, c] : e) out << join(lam.parts()) << ',' << csv_field(c.to_string()) << '\n';
            break;
        case Format::text:
            if (e.empty()) out << "0\n";
            for (const auto& [lam, c] : e) out << basis_name(b) << lam.to_string() << ": " << c.to_string() << '\n';
            break;
    }
}

void emit_reports(std::ostream& out, const std::vector<IdentityCheck>& rs, bool as_array, Format f) {
    switch (f) {
        case Format::json:
            if (as_array) {
                Json arr = Json::array();
                for (const auto& r : rs) arr.push_back(report_to_json(r));
                out << arr.dump() << '\n';
            } else {
                out << report_to_json(rs.front()).dump() << '\n';
            }
            break;
        case Format::csv:
            out << "identity,params,verdict,elapsed_ms,witness_term,witness_lhs,witness_rhs\n";
            for (const auto& r : rs)
                out << r.name << ',' << csv_field(r.params.to_string()) << ',' << (r.verdict ? "true" : "false") << ','
                    << r.elapsed_ms << ',' << csv_field(r.witness ? r.witness->term : "") << ','
                    << csv_field(r.witness ? r.witness->lhs : "") << ',' << csv_field(r.witness ? r.witness->rhs : "")
                    << '\n';
            break;
        case Format::text:
            for (const auto& r : rs) {
                out << (r.verdict ? "PASS " : "FAIL ") << r.name;
                if (!r.params.to_string().empty()) out << ' ' << r.params.to_string();
                out << " (" << r.elapsed_ms << " ms)";
                if (r.witness) out << "  witness " << r.witness->term << ": " << r.witness->lhs << " vs " << r.witness->rhs;
                out << '\n';
                for (const auto& n : r.notes) out << "  " << n << '\n';
            }
            break;
    }
}

std::vector<int> parse_int_list(const std::string& s, const std::string& flag) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw UsageError(flag + " expects a comma-separated integer list, got '" + s + "'");
        }
    }
    return out;
}

std::optional<Composition> touch_option(const std::string& s) {
    if (s.empty()) return std::nullopt;
    try {
        return Composition(parse_int_list(s, "--touch"));
    } catch (const std::invalid_argument& ex) {
        throw UsageError(ex.what());
    }
}

void error_out(std::ostream& err, const std::string& code, const std::string& message,
               std::optional<std::size_t> position = std::nullopt) {
    Json j = {{"error", code}, {"message", message}};
    if (position) j["position"] = *position;
    err << j.dump() << '\n';
}

void attach_env(CLI::App& app) {
    for (CLI::Option* opt : app.get_options()) {
        if (opt->get_lnames().empty() || opt->get_lnames().front().rfind("help", 0) == 0) continue;
        std::string name = "QTSYM_";
        for (char c : opt->get_lnames().front()) name += c == '-' ? '_' : static_cast<char>(std::toupper(c));
        opt->envname(name);
    }
    for (CLI::App* sub : app.get_subcommands({})) attach_env(*sub);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact symmetric-function calculus: Macdonald polynomials, nabla, creation operators, parking functions",
                 "qtsym"};
    app.require_subcommand(1);
    app.fallthrough();
    Config cfg;
    app.add_option("--trunc", cfg.trunc, "Global degree bound")->check(CLI::Range(1, 64))->capture_default_str();
    app.add_option("--threads", cfg.threads, "Worker threads")->check(CLI::Range(1, 1024))->capture_default_str();
    app.add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "Seed for randomized checks")->capture_default_str();

    // expand
    std::string expand_src, expand_basis = "s";
    auto* expand = app.add_subcommand("expand", "Evaluate an expression and expand it in a basis");
    expand->add_option("expr", expand_src, "Expression, e.g. nabla(e[3])")->required();
    expand->add_option("--basis", expand_basis, "m, e, h, p, s or a long name")->capture_default_str();

    // verify
    std::string verify_name;
    bool verify_all = false, verify_list = false;
    int max_degree = 6;
    std::optional<long> vn, vk, vl, va, instances, mutate_term;
    std::string alpha, mutation = "sign";
    auto* verify = app.add_subcommand("verify", "Run a registered identity check");
    verify->add_option("name", verify_name, "Identity name");
    verify->add_flag("--all", verify_all, "Run the whole registry");
    verify->add_flag("--list", verify_list, "List registered identities");
    verify->add_option("--max-degree", max_degree, "Sweep bound for --all; degree bound for randomized checks")
        ->capture_default_str();
    verify->add_option("--n", vn);
    verify->add_option("--k", vk);
    verify->add_option("--l", vl);
    verify->add_option("--a", va);
    verify->add_option("--alpha", alpha, "Composition, e.g. 2,1,1");
    verify->add_option("--instances", instances, "Instances for randomized checks");
    verify->add_option("--mutate-term", mutate_term, "Corrupt this right-hand term of 'main'");
    verify->add_option("--mutation", mutation, "sign or qpower")->check(CLI::IsMember({"sign", "qpower"}));

    // pf
    auto* pf = app.add_subcommand("pf", "Parking functions");
    pf->require_subcommand(1);
    int pf_n = 0;
    std::string pf_touch, pf_weight = "none";
    bool pf_schur = false;
    auto* pf_list = pf->add_subcommand("list", "List PF_n with statistics");
    pf_list->add_option("--n", pf_n)->required()->check(CLI::Range(1, 8));
    pf_list->add_option("--touch", pf_touch, "Keep only this touch composition");
    auto* pf_gen = pf->add_subcommand("genfun", "sum of weight q^dinv t^area F_ides");
    pf_gen->add_option("--n", pf_n)->required()->check(CLI::Range(1, 8));
    pf_gen->add_option("--touch", pf_touch, "Keep only this touch composition");
    pf_gen->add_option("--weight", pf_weight, "none, ret ([ret]_q) or erun ([erun(touch)+1]_q)")
        ->check(CLI::IsMember({"none", "ret", "erun"}));
    pf_gen->add_flag("--schur", pf_schur, "Solve into the Schur basis");

    // positivity
    std::string pos_src;
    int pos_sign = 1;
    auto* positivity = app.add_subcommand("positivity", "Schur positivity of sign * nabla(expr)");
    positivity->add_option("expr", pos_src, "Expression")->required();
    positivity->add_option("--sign", pos_sign)->check(CLI::IsMember({-1, 1}))->capture_default_str();

    // kostka
    int kostka_n = 0;
    auto* kostka = app.add_subcommand("kostka", "Table of modified q,t-Kostka polynomials");
    kostka->add_option("--n", kostka_n)->required()->check(CLI::Range(1, 8));

    attach_env(app);

    std::vector<std::string> argv_store{"qtsym"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& ex) {
        error_out(err, "usage", ex.what());
        return 2;
    }

    const Format fmt = cfg.fmt();
    try {
        if (*expand) {
            Basis b = parse_basis(expand_basis);
            SymFun f = evaluate(expand_src, cfg.trunc);
            emit_expansion(out, basis_extract(f, b), b, fmt);
            return 0;
        }
        if (*verify) {
            if (verify_list) {
                for (const auto& info : identity_list()) {
                    out << info.name;
                    for (const auto& p : info.params) out << " --" << p;
                    out << "  " << info.summary << '\n';
                }
                return 0;
            }
            CheckOptions opts = cfg.options();
            std::vector<IdentityCheck> results;
            if (verify_all) {
                if (!verify_name.empty()) throw UsageError("--all takes no identity name");
                if (max_degree > cfg.trunc) throw UsageError("--max-degree exceeds --trunc");
                results = check_all(max_degree, opts);
            } else {
                if (verify_name.empty()) throw UsageError("verify needs an identity name, --all or --list");
                Params p;
                if (vn) p.ints["n"] = *vn;
                if (vk) p.ints["k"] = *vk;
                if (vl) p.ints["l"] = *vl;
                if (va) p.ints["a"] = *va;
                if (instances) p.ints["instances"] = *instances;
                if (verify->count("--max-degree")) p.ints["max_degree"] = max_degree;
                if (!alpha.empty()) p.lists["alpha"] = parse_int_list(alpha, "--alpha");
                if (mutate_term) {
                    if (verify_name != "main") throw UsageError("--mutate-term applies to 'main' only");
                    opts.mutation = Mutation{static_cast<int>(*mutate_term),
                                             mutation == "sign" ? MutationKind::sign : MutationKind::qpower};
                }
                results.push_back(check(verify_name, p, opts));
            }
            emit_reports(out, results, verify_all, fmt);
            bool ok = std::all_of(results.begin(), results.end(), [](const IdentityCheck& r) { return r.verdict; });
            return ok ? 0 : 1;
        }
        if (*pf) {
            auto touch = touch_option(pf_touch);
            if (*pf_list) {
                if (fmt == Format::csv) out << kPfCsvHeader << '\n';
                Json arr = Json::array();
                enumerate_pf(
                    pf_n,
                    [&](const ParkingFunction& p) {
                        PFStats s = stats(p);
                        if (fmt == Format::csv)
                            out << pf_csv_row(p, s) << '\n';
                        else if (fmt == Format::json)
                            arr.push_back(pf_to_json(p, s));
                        else
                            out << p.rows_string() << "  area=" << s.area << " dinv=" << s.dinv
                                << " touch=" << s.touch.to_string() << " sigma=" << join(s.sigma)
                                << " ides=" << subset_to_string(s.ides) << '\n';
                    },
                    touch);
                if (fmt == Format::json) out << arr.dump() << '\n';
                return 0;
            }
            PFWeight weight;
            if (pf_weight == "ret") weight = [](const ParkingFunction&, const PFStats& s) { return q_integer(s.ret); };
            if (pf_weight == "erun")
                weight = [](const ParkingFunction&, const PFStats& s) { return q_integer(erun(s.touch) + 1); };
            FundVector v = pf_genfun(pf_n, touch, weight, cfg.threads);
            if (pf_schur) {
                emit_expansion(out, fund_solve(v), Basis::s, fmt);
            } else if (fmt == Format::json) {
                out << fund_to_json(v).dump() << '\n';
            } else {
                if (fmt == Format::csv) out << "subset,coeff\n";
                for (const auto& [s, c] : v.coeffs)
                    out << (fmt == Format::csv ? join(subset_elements(s)) + "," + csv_field(c.to_string())
                                               : "F" + subset_to_string(s) + ": " + c.to_string())
                        << '\n';
            }
            return 0;
        }
        if (*positivity) {
            SymFun f = evaluate(pos_src, cfg.trunc);
            PositivityReport rep = nabla_positivity_report(f, pos_sign);
            if (fmt == Format::json) {
                Json entries = Json::array();
                for (const auto& e : rep.entries)
                    entries.push_back(
                        {{"partition", e.lambda.parts()}, {"coeff", e.coeff.to_string()}, {"nonnegative", e.nonnegative}});
                out << Json{{"expression", pos_src}, {"sign", pos_sign}, {"verdict", rep.verdict}, {"entries", entries}}.dump()
                    << '\n';
            } else {
                if (fmt == Format::csv) out << "partition,coeff,nonnegative\n";
                for (const auto& e : rep.entries)
                    out << (fmt == Format::csv ? join(e.lambda.parts()) + "," + csv_field(e.coeff.to_string()) + "," +
                                                     (e.nonnegative ? "true" : "false")
                                               : "s" + e.lambda.to_string() + ": " + e.coeff.to_string() +
                                                     (e.nonnegative ? "" : "  (not in N[q,t])"))
                        << '\n';
                if (fmt == Format::text) out << (rep.verdict ? "positive" : "NOT positive") << '\n';
            }
            return rep.verdict ? 0 : 1;
        }
        if (*kostka) {
            if (kostka_n > cfg.trunc) throw UsageError("--n exceeds --trunc");
            if (fmt == Format::json) {
                Json cols = Json::array();
                for (const auto& mu : partitions_of(kostka_n)) {
                    Json col = expansion_to_json(kostka_column(mu), Basis::s);
                    cols.push_back({{"mu", mu.parts()}, {"basis", col["basis"]}, {"terms", col["terms"]}});
                }
                out << Json{{"n", kostka_n}, {"columns", cols}}.dump() << '\n';
            } else {
                if (fmt == Format::csv) out << "mu,lambda,coeff\n";
                for (const auto& mu : partitions_of(kostka_n))
                    for (const auto& [lam, c] : kostka_column(mu))
                        out << (fmt == Format::csv
                                    ? join(mu.parts()) + "," + join(lam.parts()) + "," + csv_field(c.to_string())
                                    : "K" + lam.to_string() + mu.to_string() + ": " + c.to_string())
                            << '\n';
            }
            return 0;
        }
    } catch (const ParseError& ex) {
        error_out(err, "parse_error", ex.what(), ex.position());
        return 2;
    } catch (const UnknownIdentity& ex) {
        error_out(err, "unknown_identity", ex.what());
        return 2;
    } catch (const ParameterError& ex) {
        error_out(err, "parameter_error", ex.what());
        return 2;
    } catch (const DegreeOverflow& ex) {
        error_out(err, "degree_overflow", ex.what());
        return 2;
    } catch (const UsageError& ex) {
        error_out(err, "usage", ex.what());
        return 2;
    } catch (const std::invalid_argument& ex) {
        error_out(err, "invalid_argument", ex.what());
        return 2;
    } catch (const std::exception& ex) {
        error_out(err, "error", ex.what());
        return 2;
    }
    error_out(err, "usage", "no command given");
    return 2;
}

}  // namespace qtsym
