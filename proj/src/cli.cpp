#include "mackit/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <memory>
#include <sstream>

#include "mackit/cache.hpp"
#include "mackit/json_io.hpp"
#include "mackit/verify.hpp"

namespace mackit::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

constexpr long kDefaultBudgetQprime = 12;
constexpr long kDefaultBudgetHtilde = 8;

// Bracketed comma list: [3,1,1] or [] for the empty partition.
Partition parse_partition(const std::string& text) {
    std::string s = text;
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw InvalidArgument("partition must be a bracketed list like [3,1,1]");
    s = s.substr(1, s.size() - 2);
    std::vector<long> parts;
    if (!s.empty()) {
        std::stringstream ss(s);
        std::string item;
        long pos = 0;
        while (std::getline(ss, item, ',')) {
            ++pos;
            try {
                size_t used = 0;
                long v = std::stol(item, &used);
                if (used != item.size()) throw std::invalid_argument(item);
                parts.push_back(v);
            } catch (const std::exception&) {
                throw InvalidArgument("invalid partition entry '" + item + "' at position " +
                                      std::to_string(pos));
            }
        }
    }
    try {
        return Partition(parts);
    } catch (const InvalidArgument& e) {
        throw InvalidArgument(std::string(e.what()) + " in " + text);
    }
}

enum class Format { Json, Csv, Pretty };

Format parse_format(const std::string& s) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    if (s == "pretty") return Format::Pretty;
    throw InvalidArgument("unknown format '" + s + "'");
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

struct Options {
    Format format = Format::Pretty;
    std::string cache_dir;
    long budget = 0;  // 0 = defaults
    int jobs = 1;
};

long family_budget(const Options& opt, MacdonaldKind kind) {
    if (opt.budget > 0) return opt.budget;
    return kind == MacdonaldKind::Htilde ? kDefaultBudgetHtilde : kDefaultBudgetQprime;
}

void print_symfunc(std::ostream& out, const SymFunc& f, Format fmt) {
    switch (fmt) {
        case Format::Json: out << to_json(f).dump() << "\n"; break;
        case Format::Csv:
            out << "part,coeff\n";
            for (const auto& [p, c] : f.coeffs())
                out << csv_quote(p.to_string()) << "," << csv_quote(c.to_string()) << "\n";
            break;
        case Format::Pretty: out << f.to_string() << "\n"; break;
    }
}

void print_cyclotomic(std::ostream& out, const CyclotomicSymFunc& f, Format fmt) {
    switch (fmt) {
        case Format::Json: out << to_json(f).dump() << "\n"; break;
        case Format::Csv:
            out << "part,coeff\n";
            for (const auto& [p, c] : f.coeffs())
                out << csv_quote(p.to_string()) << "," << csv_quote(c.to_string()) << "\n";
            break;
        case Format::Pretty: out << f.to_string() << " (t = primitive " << f.order()
                                 << "-th root of unity)\n"; break;
    }
}

int cmd_expand(const Options& opt, const std::string& family, const std::string& part_text,
               const std::string& basis_text, long at_root, std::ostream& out) {
    MacdonaldKind kind = macdonald_kind_from_string(family);
    Partition lambda = parse_partition(part_text);
    if (lambda.weight() > family_budget(opt, kind))
        throw BudgetExceeded("weight " + std::to_string(lambda.weight()) + " exceeds budget " +
                             std::to_string(family_budget(opt, kind)) +
                             " (raise with --budget)");
    Basis basis = basis_from_code(basis_text.empty() ? 's' : basis_text.at(0));
    SymFunc f = convert(macdonald(kind, lambda), basis);
    if (at_root > 0) {
        print_cyclotomic(out, specialize_at_root(f, at_root), opt.format);
    } else {
        print_symfunc(out, f, opt.format);
    }
    return kExitOk;
}

int cmd_specialize(const Options& opt, const std::string& family, const std::string& part_text,
                   long length, bool divide_q, long at_root, std::ostream& out) {
    Partition lambda = parse_partition(part_text);
    SymFunc f(Basis::Schur);
    bool is_basis = family.size() == 1 && std::string("mpehs").find(family) != std::string::npos;
    if (is_basis) {
        f = SymFunc::generator(basis_from_code(family.at(0)), lambda);
    } else {
        MacdonaldKind kind = macdonald_kind_from_string(family);
        if (lambda.weight() > family_budget(opt, kind))
            throw BudgetExceeded("weight " + std::to_string(lambda.weight()) +
                                 " exceeds budget (raise with --budget)");
        f = macdonald(kind, lambda);
    }
    QtRational value = principal_specialize(f, length, divide_q);
    if (at_root > 0) {
        CyclotomicScalar c = CyclotomicScalar::reduce(value, at_root);
        switch (opt.format) {
            case Format::Json: out << to_json(c).dump() << "\n"; break;
            case Format::Csv: out << "value\n" << csv_quote(c.to_string()) << "\n"; break;
            case Format::Pretty: out << c.to_string() << "\n"; break;
        }
    } else {
        switch (opt.format) {
            case Format::Json: out << to_json(value).dump() << "\n"; break;
            case Format::Csv: out << "value\n" << csv_quote(value.to_string()) << "\n"; break;
            case Format::Pretty: out << value.to_string() << "\n"; break;
        }
    }
    return kExitOk;
}

int cmd_kostka(const Options& opt, const std::string& variant_text, long weight, long at_root,
               std::ostream& out) {
    KostkaVariant variant = kostka_variant_from_string(variant_text);
    long budget = opt.budget > 0 ? opt.budget
                  : variant == KostkaVariant::Ktilde ? kDefaultBudgetHtilde
                                                     : kDefaultBudgetQprime;
    if (weight > budget)
        throw BudgetExceeded("weight " + std::to_string(weight) + " exceeds budget " +
                             std::to_string(budget) + " (raise with --budget)");
    KostkaMatrix m = kostka(variant, weight);
    if (at_root > 0) {
        // reduce entries mod Phi_l
        Json j;
        j["variant"] = kostka_variant_name(m.variant);
        j["weight"] = m.weight;
        j["order"] = at_root;
        Json rows = Json::array(), cols = Json::array(), entries = Json::array();
        for (const auto& p : m.rows) rows.push_back(to_json(p));
        for (const auto& p : m.cols) cols.push_back(to_json(p));
        std::vector<std::vector<CyclotomicScalar>> reduced;
        for (const auto& row : m.entries) {
            std::vector<CyclotomicScalar> r;
            Json jr = Json::array();
            for (const auto& e : row) {
                r.push_back(CyclotomicScalar::reduce(e, at_root));
                jr.push_back(to_json(r.back()));
            }
            reduced.push_back(std::move(r));
            entries.push_back(std::move(jr));
        }
        j["rows"] = std::move(rows);
        j["cols"] = std::move(cols);
        j["entries"] = std::move(entries);
        switch (opt.format) {
            case Format::Json: out << j.dump() << "\n"; break;
            case Format::Csv: {
                out << "lambda\\mu";
                for (const auto& p : m.cols) out << "," << csv_quote(p.to_string());
                out << "\n";
                for (size_t i = 0; i < m.rows.size(); ++i) {
                    out << csv_quote(m.rows[i].to_string());
                    for (size_t jx = 0; jx < m.cols.size(); ++jx)
                        out << "," << csv_quote(reduced[i][jx].to_string());
                    out << "\n";
                }
                break;
            }
            case Format::Pretty:
                out << kostka_variant_name(m.variant) << " weight " << m.weight << " mod Phi_"
                    << at_root << "\n";
                for (size_t i = 0; i < m.rows.size(); ++i)
                    for (size_t jx = 0; jx < m.cols.size(); ++jx)
                        if (!reduced[i][jx].is_zero())
                            out << "  [" << m.rows[i].to_string() << "][" << m.cols[jx].to_string()
                                << "] = " << reduced[i][jx].to_string() << "\n";
                break;
        }
        return kExitOk;
    }
    switch (opt.format) {
        case Format::Json: out << to_json(m).dump() << "\n"; break;
        case Format::Csv: {
            out << "lambda\\mu";
            for (const auto& p : m.cols) out << "," << csv_quote(p.to_string());
            out << "\n";
            for (size_t i = 0; i < m.rows.size(); ++i) {
                out << csv_quote(m.rows[i].to_string());
                for (size_t jx = 0; jx < m.cols.size(); ++jx)
                    out << "," << csv_quote(m.entries[i][jx].to_string());
                out << "\n";
            }
            break;
        }
        case Format::Pretty:
            out << kostka_variant_name(m.variant) << " weight " << m.weight << "\n";
            for (size_t i = 0; i < m.rows.size(); ++i)
                for (size_t jx = 0; jx < m.cols.size(); ++jx)
                    if (!m.entries[i][jx].is_zero())
                        out << "  [" << m.rows[i].to_string() << "][" << m.cols[jx].to_string()
                            << "] = " << m.entries[i][jx].to_string() << "\n";
            break;
    }
    return kExitOk;
}

int cmd_verify(const Options& opt, const std::string& suite_text, std::ostream& out) {
    Suite suite = suite_from_string(suite_text);
    VerifyBudget budget = VerifyBudget::with_override(opt.budget);
    std::vector<Claim> claims = enumerate_suite(suite, budget);
    std::vector<VerificationReport> reports = run_claims(claims, opt.jobs);
    long failed = 0, undefined = 0;
    for (const auto& rep : reports) {
        if (rep.status == VerifyStatus::Fail) ++failed;
        if (rep.status == VerifyStatus::Undefined) ++undefined;
        switch (opt.format) {
            case Format::Json: out << to_json(rep).dump() << "\n"; break;
            case Format::Csv: {
                std::string params;
                for (const auto& [k, v] : rep.params) {
                    if (!params.empty()) params += " ";
                    params += k + "=" + v;
                }
                out << csv_quote(rep.claim) << "," << csv_quote(params) << ","
                    << verify_status_name(rep.status) << "," << rep.elapsed_ms << "\n";
                break;
            }
            case Format::Pretty: {
                out << "[" << verify_status_name(rep.status) << "] " << rep.claim;
                for (const auto& [k, v] : rep.params) out << " " << k << "=" << v;
                out << " (" << rep.elapsed_ms << " ms)\n";
                for (const auto& w : rep.witnesses)
                    out << "    " << w.key << ": " << w.lhs
                        << (w.rhs.empty() ? "" : " != " + w.rhs) << "\n";
                break;
            }
        }
    }
    if (opt.format == Format::Pretty) {
        out << reports.size() << " claims, " << failed << " failed, " << undefined
            << " undefined\n";
    }
    return failed > 0 ? kExitVerifyFailure : kExitOk;
}

int cmd_character(const Options& opt, long k, long j, const std::string& basis_text,
                  std::ostream& out) {
    CyclicCharacter ch = cyclic_character(k, j);
    Basis basis = basis_from_code(basis_text.empty() ? 'p' : basis_text.at(0));
    print_symfunc(out, convert(ch.frobenius, basis), opt.format);
    return kExitOk;
}

int cmd_cache(const Options& opt, const std::string& action, DiskCache* cache, std::ostream& out) {
    if (!cache) throw InvalidArgument("no cache directory (set MACKIT_CACHE or --cache-dir)");
    if (action == "stats") {
        auto stats = cache->stats();
        Json j;
        j["dir"] = cache->dir().string();
        Json files = Json::array();
        std::uintmax_t total = 0;
        for (const auto& st : stats) {
            Json f;
            f["name"] = st.name;
            f["bytes"] = st.bytes;
            f["family"] = st.family;
            f["weight"] = st.weight;
            f["entries"] = st.entries;
            f["valid"] = st.valid;
            files.push_back(std::move(f));
            total += st.bytes;
        }
        j["files"] = std::move(files);
        j["total_bytes"] = total;
        if (opt.format == Format::Pretty) {
            out << "cache dir: " << cache->dir().string() << "\n";
            for (const auto& st : stats)
                out << "  " << st.name << " (" << st.bytes << " bytes, " << st.entries
                    << " entries" << (st.valid ? "" : ", stale schema") << ")\n";
            out << "total: " << total << " bytes in " << stats.size() << " files\n";
        } else {
            out << j.dump() << "\n";
        }
        return kExitOk;
    }
    if (action == "clear") {
        long removed = cache->clear();
        if (opt.format == Format::Pretty) out << "removed " << removed << " cache files\n";
        else out << Json{{"removed", removed}}.dump() << "\n";
        return kExitOk;
    }
    throw InvalidArgument("cache action must be 'stats' or 'clear'");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"mackit: exact Macdonald polynomials and their root-of-unity specializations"};
    app.require_subcommand(1);

    Options opt;
    std::string format_text = "pretty";
    app.add_option("--format", format_text, "output format: json, csv, pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    app.add_option("--cache-dir", opt.cache_dir, "on-disk cache directory (overrides MACKIT_CACHE)");
    app.add_option("--budget", opt.budget, "weight budget override");
    app.add_option("--jobs", opt.jobs, "worker threads for verification suites")
        ->check(CLI::Range(1, 64));

    std::string family, part_text, basis_text, variant_text, suite_text, cache_action;
    long at_root = 0, length = 1, weight = 1, char_k = 1, char_j = 0;
    bool divide_q = false;

    auto* expand = app.add_subcommand("expand", "expand a Macdonald family member in a basis");
    expand->add_option("family", family, "P, Q, Qprime, J, Htilde")->required();
    expand->add_option("partition", part_text, "index partition, e.g. [2,2,2]")->required();
    expand->add_option("--basis", basis_text, "target basis: m p e h s (default s)");
    expand->add_option("--at-root", at_root, "reduce coefficients mod Phi_l");

    auto* specialize = app.add_subcommand("specialize",
                                          "principal specialization on 1, t, ..., t^{l-1}");
    specialize->add_option("family", family, "P, Q, Qprime, J, Htilde or a basis letter")->required();
    specialize->add_option("partition", part_text)->required();
    specialize->add_option("--length", length, "alphabet length l")->required();
    specialize->add_flag("--divide-one-minus-q", divide_q, "use the alphabet x/(1-q)");
    specialize->add_option("--at-root", at_root, "reduce the value mod Phi_d");

    auto* kostka_cmd = app.add_subcommand("kostka", "emit a Kostka matrix");
    kostka_cmd->add_option("variant", variant_text, "K, Ktilde, Kprime")->required();
    kostka_cmd->add_option("weight", weight)->required();
    kostka_cmd->add_option("--at-root", at_root, "reduce entries mod Phi_l");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite_text,
                       "plethysm, factorization, congruence, kostka-congruence, pieri, "
                       "orthogonality, all")
        ->required();

    auto* character = app.add_subcommand("character", "cyclic character l_k^{(j)}");
    character->add_option("k", char_k)->required();
    character->add_option("j", char_j)->required();
    character->add_option("--basis", basis_text, "target basis (default p)");

    auto* cache_cmd = app.add_subcommand("cache", "manage the on-disk cache");
    cache_cmd->add_option("action", cache_action, "stats or clear")->required();

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        opt.format = parse_format(format_text);
        std::unique_ptr<DiskCache> cache;
        std::string cache_path = opt.cache_dir;
        if (cache_path.empty()) {
            if (const char* env = std::getenv("MACKIT_CACHE")) cache_path = env;
        }
        if (!cache_path.empty()) {
            cache = std::make_unique<DiskCache>(cache_path);
            set_macdonald_store(cache.get());
        }
        int rc = kExitOk;
        if (expand->parsed()) rc = cmd_expand(opt, family, part_text, basis_text, at_root, out);
        else if (specialize->parsed())
            rc = cmd_specialize(opt, family, part_text, length, divide_q, at_root, out);
        else if (kostka_cmd->parsed()) rc = cmd_kostka(opt, variant_text, weight, at_root, out);
        else if (verify->parsed()) rc = cmd_verify(opt, suite_text, out);
        else if (character->parsed()) rc = cmd_character(opt, char_k, char_j, basis_text, out);
        else if (cache_cmd->parsed()) rc = cmd_cache(opt, cache_action, cache.get(), out);
        if (cache) {
            flush_macdonald_store();
            set_macdonald_store(nullptr);
        }
        return rc;
    } catch (const BudgetExceeded& e) {
        set_macdonald_store(nullptr);
        err << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const Error& e) {
        set_macdonald_store(nullptr);
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        set_macdonald_store(nullptr);
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

} // namespace mackit::cli
