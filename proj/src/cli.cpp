#include "suw/cli.hpp"

#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "suw/arches.hpp"
#include "suw/closed_forms.hpp"
#include "suw/errors.hpp"
#include "suw/oracle.hpp"
#include "suw/ranking.hpp"
#include "suw/universal_dp.hpp"
#include "suw/unranking.hpp"
#include "suw/words.hpp"

namespace suw::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Config {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t sigma = 1;
    std::string word;
    std::string rank;
    std::string from = "0";
    std::optional<std::uint64_t> limit;
    bool json = false;
};

void emit(std::ostream& out, const std::string& command, const Json& params, const Json& result) {
    Json doc;
    doc["command"] = command;
    doc["params"] = params;
    doc["result"] = result;
    out << doc.dump() << '\n';
}

Json nks(const Config& c) { return Json{{"n", c.n}, {"k", c.k}, {"sigma", c.sigma}}; }

int cmd_count(const Config& c, std::ostream& out) {
    const BigCount total = count_universal(c.n, c.k, c.sigma);
    if (c.json) {
        emit(out, "count", nks(c), total.to_string());
    } else {
        out << total << '\n';
    }
    return kSuccess;
}

int cmd_rank(const Config& c, std::ostream& out) {
    const Word w = parse_word(c.word, c.sigma);
    const RankResult r = rank(w, c.k);
    if (c.json) {
        emit(out, "rank",
             Json{{"n", w.size()}, {"k", c.k}, {"sigma", c.sigma}, {"word", format_word(w)}},
             Json{{"rank", r.rank.to_string()}, {"member", r.member}});
    } else {
        out << r.rank << '\n' << "member: " << (r.member ? "true" : "false") << '\n';
    }
    return kSuccess;
}

int cmd_unrank(const Config& c, std::ostream& out) {
    const BigCount r = BigCount::from_decimal(c.rank);
    const Word w = unrank(r, c.n, c.k, c.sigma);
    if (c.json) {
        Json params = nks(c);
        params["rank"] = r.to_string();
        emit(out, "unrank", params, format_word(w));
    } else {
        out << w << '\n';
    }
    return kSuccess;
}

int cmd_enum(const Config& c, std::ostream& out) {
    const BigCount from = BigCount::from_decimal(c.from);
    EnumerationCursor cursor(std::make_shared<const SuffixCountTable>(build_table(c.n, c.k, c.sigma)),
                             from);
    Json params = nks(c);
    params["from"] = from.to_string();
    params["limit"] = c.limit ? Json(*c.limit) : Json(nullptr);

    std::uint64_t emitted = 0;
    while (!c.limit || emitted < *c.limit) {
        const BigCount r = cursor.next_rank();
        std::optional<Word> w = cursor.next();
        if (!w) {
            break;
        }
        if (c.json) {
            emit(out, "enum", params, Json{{"rank", r.to_string()}, {"word", format_word(*w)}});
        } else {
            out << *w << '\n';
        }
        ++emitted;
    }
    out.flush();
    return kSuccess;
}

int cmd_arch(const Config& c, std::ostream& out) {
    const Word w = parse_word(c.word, c.sigma);
    const ArchFactorization f = arch_factorize(w);
    const std::vector<Word> factors = arch_factors(w, f);

    if (c.json) {
        Json arches = Json::array();
        for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
            arches.push_back(format_word(factors[i]));
        }
        emit(out, "arch", Json{{"n", w.size()}, {"sigma", c.sigma}, {"word", format_word(w)}},
             Json{{"arches", arches},
                  {"arch_starts", f.arch_starts},
                  {"suffix", format_word(factors.back())},
                  {"suffix_start", f.suffix_start},
                  {"index", f.arch_count()}});
        return kSuccess;
    }
    // Digit words are joined with commas; comma-formatted words with ';'.
    const char sep = c.sigma <= 9 ? ',' : ';';
    std::string line;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const bool is_suffix = i + 1 == factors.size();
        if (is_suffix && factors[i].empty()) {
            break;
        }
        if (i != 0) {
            line.push_back(sep);
        }
        line += format_word(factors[i]);
    }
    out << line << '\n' << "index: " << f.arch_count() << '\n';
    return kSuccess;
}

int cmd_closed_forms(const Config& c, std::ostream& out) {
    const BigCount zero = count_index_zero(c.n, c.sigma);
    const BigCount one = count_one_universal(c.n, c.sigma);
    // No word of length 0 contains every symbol.
    const BigCount arches = c.n == 0 ? BigCount{0} : count_arches(c.n, c.sigma);
    if (c.json) {
        emit(out, "closed-forms", Json{{"n", c.n}, {"sigma", c.sigma}},
             Json{{"index_zero", zero.to_string()},
                  {"one_universal", one.to_string()},
                  {"arches", arches.to_string()}});
    } else {
        out << "index-zero: " << zero << '\n'
            << "one-universal: " << one << '\n'
            << "arches: " << arches << '\n';
    }
    return kSuccess;
}

int cmd_verify(const Config& c, std::ostream& out) {
    const std::vector<Word> words = oracle::all_words(c.n, c.sigma);
    const std::vector<Word> members = oracle::brute_enumerate(c.n, c.k, c.sigma);
    const SuffixCountTable table = build_table(c.n, c.k, c.sigma);

    const BigCount total = table.universal_count();
    const bool count_ok = total == BigCount{members.size()};

    bool enum_ok = true;
    {
        EnumerationCursor cursor(std::make_shared<const SuffixCountTable>(table), BigCount{0});
        std::size_t i = 0;
        for (std::optional<Word> w = cursor.next(); w; w = cursor.next(), ++i) {
            if (i >= members.size() || !(*w == members[i])) {
                enum_ok = false;
                break;
            }
        }
        enum_ok = enum_ok && i == members.size();
    }

    bool rank_ok = true;
    bool universality_ok = true;
    for (const Word& w : words) {
        const RankResult r = rank(w, c.k, table);
        const std::size_t expected = oracle::insertion_index(members, w);
        const bool is_member = oracle::brute_is_k_universal(w, c.k);
        rank_ok = rank_ok && r.rank == BigCount{expected} && r.member == is_member;
        universality_ok = universality_ok && is_k_universal(w, c.k) == is_member;
    }

    bool unrank_ok = true;
    for (std::size_t i = 0; i < members.size() && unrank_ok; ++i) {
        unrank_ok = unrank(BigCount{i}, table) == members[i];
    }

    const bool passed = count_ok && enum_ok && rank_ok && unrank_ok && universality_ok;
    auto word = [](bool ok) { return ok ? "pass" : "FAIL"; };
    if (c.json) {
        emit(out, "verify", nks(c),
             Json{{"count", total.to_string()},
                  {"oracle_count", members.size()},
                  {"count_ok", count_ok},
                  {"enumeration_ok", enum_ok},
                  {"rank_ok", rank_ok},
                  {"unrank_ok", unrank_ok},
                  {"universality_ok", universality_ok},
                  {"passed", passed}});
    } else {
        out << "count: " << word(count_ok) << " (" << total << " vs oracle " << members.size()
            << ")\n"
            << "enumeration: " << word(enum_ok) << '\n'
            << "rank: " << word(rank_ok) << " (" << words.size() << " words)\n"
            << "unrank: " << word(unrank_ok) << " (" << members.size() << " ranks)\n"
            << "universality: " << word(universality_ok) << '\n'
            << "verify: " << word(passed) << '\n';
    }
    return passed ? kSuccess : kDomainError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Counting, ranking, unranking and enumeration of k-subsequence universal words",
                 "suw"};
    app.require_subcommand(1);
    app.fallthrough();

    Config c;
    app.add_flag("--json", c.json, "Machine-readable output (one JSON object per line)");

    auto sigma_opt = [&](CLI::App* sub) {
        sub->add_option("--sigma", c.sigma, "Alphabet size")->required()->check(CLI::PositiveNumber);
    };
    auto nks_opts = [&](CLI::App* sub) {
        sub->add_option("--n", c.n, "Word length")->required();
        sub->add_option("--k", c.k, "Universality level")->required();
        sigma_opt(sub);
    };

    CLI::App* count = app.add_subcommand("count", "Size of U(n,k,sigma)");
    nks_opts(count);

    CLI::App* rank_cmd = app.add_subcommand("rank", "0-based rank of WORD in U(|WORD|,k,sigma)");
    rank_cmd->add_option("--k", c.k, "Universality level")->required();
    sigma_opt(rank_cmd);
    rank_cmd->add_option("WORD", c.word, "Word text")->required();

    CLI::App* unrank_cmd = app.add_subcommand("unrank", "Member with the given 0-based rank");
    nks_opts(unrank_cmd);
    unrank_cmd->add_option("RANK", c.rank, "Decimal rank")->required();

    CLI::App* enum_cmd = app.add_subcommand("enum", "Stream members in lexicographic order");
    nks_opts(enum_cmd);
    enum_cmd->add_option("--from", c.from, "First 0-based rank to emit");
    enum_cmd->add_option("--limit", c.limit, "Maximum number of words");

    CLI::App* arch = app.add_subcommand("arch", "Arch factorization and universality index");
    sigma_opt(arch);
    arch->add_option("WORD", c.word, "Word text")->required();

    CLI::App* verify = app.add_subcommand("verify", "Cross-check every operation against brute force");
    nks_opts(verify);

    CLI::App* closed = app.add_subcommand("closed-forms", "Closed-form counts for index 0, 1-universal words and arches");
    closed->add_option("--n", c.n, "Word length")->required();
    sigma_opt(closed);

    std::vector<const char*> argv;
    argv.push_back("suw");
    for (const std::string& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        if (count->parsed()) return cmd_count(c, out);
        if (rank_cmd->parsed()) return cmd_rank(c, out);
        if (unrank_cmd->parsed()) return cmd_unrank(c, out);
        if (enum_cmd->parsed()) return cmd_enum(c, out);
        if (arch->parsed()) return cmd_arch(c, out);
        if (verify->parsed()) return cmd_verify(c, out);
        if (closed->parsed()) return cmd_closed_forms(c, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace suw::cli
