#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <narcissus/narcissus.hpp>

namespace narcissus::cli {

// Exit statuses.
inline constexpr int kPass = 0;
inline constexpr int kFail = 1;
inline constexpr int kUsage = 2;
inline constexpr int kResource = 3;

inline constexpr int kMaxCountN = 1000;
inline constexpr int kMaxNarcissisticCountN = 300;

namespace detail {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline std::string join(std::span<const int> xs) {
    std::string s;
    for (int x : xs) {
        if (!s.empty()) s += ',';
        s += std::to_string(x);
    }
    return s;
}

inline int check_command(const std::string& file, const std::string& property, const std::string& axis_text,
                         std::ostream& out) {
    const PreferenceProfile p = parse_profile(read_file(file));
    std::optional<Axis> axis;
    if (!axis_text.empty()) {
        axis = parse_axis(axis_text);
        if (axis->size() != p.size()) throw UsageError("axis has " + std::to_string(axis->size()) + " entries, profile has " + std::to_string(p.size()));
    }

    auto pass = [&](const std::string& what, const Axis& a) {
        out << "PASS: " << what << "; axis " << join(a.sequence()) << '\n';
        return kPass;
    };
    auto fail = [&](const std::string& what, const std::string& why) {
        out << "FAIL: not " << what << "; " << why << '\n';
        return kFail;
    };

    const bool needs_narcissism = property == "narcissistic" || property == "spn" || property == "scn";
    if (needs_narcissism) {
        if (property == "narcissistic" && axis) throw UsageError("--axis does not apply to narcissistic");
        for (Voter v = 1; v <= p.size(); ++v) {
            if (peak(p.voter(v)) != v) {
                return fail("narcissistic", "voter " + std::to_string(v) + " has peak " + std::to_string(peak(p.voter(v))));
            }
        }
        if (property == "narcissistic") {
            out << "PASS: narcissistic\n";
            return kPass;
        }
    }

    const bool peaked = property == "sp" || property == "spn";
    const std::string what = peaked ? "single-peaked" : "single-crossing";
    if (axis) {
        const bool ok = peaked ? is_single_peaked_wrt(p, *axis) : is_single_crossing_wrt(p, *axis);
        if (ok) return pass(what, *axis);
        return fail(what, "violated along axis " + join(axis->sequence()));
    }
    const RecognitionResult r = peaked ? check_single_peaked(p) : check_single_crossing(p);
    if (r.holds) return pass(what, *r.axis);
    return fail(what, describe(*r.witness));
}

inline int count_command(const std::string& kind, int n, std::ostream& out) {
    const int bound = kind == "narcissistic" ? kMaxNarcissisticCountN : kMaxCountN;
    if (n > bound) throw ResourceError("count " + kind + " is limited to n <= " + std::to_string(bound));
    BigCount value;
    if (kind == "spn") value = count_spn(n);
    else if (kind == "scn") value = count_scn(n);
    else if (kind == "ssyt") value = count_ssyt_closed(n);
    else value = count_narcissistic(n);
    out << to_decimal(value) << '\n';
    return kPass;
}

template <class S, class Format>
int stream_items(S&& stream, std::optional<long long> limit, bool count_only, std::ostream& out, Format&& format) {
    long long emitted = 0;
    for (const auto& item : stream) {
        if (limit && emitted >= *limit) break;
        if (!count_only) {
            if (emitted > 0) out << '\n';
            out << format(item);
        }
        ++emitted;
    }
    if (count_only) out << emitted << '\n';
    return kPass;
}

inline int enumerate_command(const std::string& kind, int n, std::optional<long long> limit, bool count_only,
                             std::ostream& out) {
    if (limit && *limit < 0) throw UsageError("--limit must be nonnegative");
    // unbounded runs are refused past the documented sizes
    const int bound = kind == "spn" ? 7 : kind == "scn" ? 8 : 7;
    if (!limit && n > bound) {
        throw ResourceError("enumerate " + kind + " without --limit is limited to n <= " + std::to_string(bound));
    }
    if (n > kMaxCountN) throw ResourceError("enumerate is limited to n <= " + std::to_string(kMaxCountN));
    if (kind == "spn") return stream_items(enumerate_spn(n), limit, count_only, out, format_profile);
    if (kind == "scn") return stream_items(enumerate_scn(n), limit, count_only, out, format_profile);
    return stream_items(enumerate_ssyt(n), limit, count_only, out, format_tableau);
}

inline int map_command(const std::string& direction, const std::string& file, std::ostream& out) {
    const std::string text = read_file(file);
    if (direction == "to-ssyt") out << format_tableau(profile_to_ssyt(parse_profile(text)));
    else out << format_profile(ssyt_to_profile(parse_tableau(text)));
    return kPass;
}

inline int canonicalize_command(const std::string& file, std::ostream& out) {
    const CanonicalForm c = canonicalize(parse_profile(read_file(file)));
    out << "# relabeling";
    for (int x = 1; x <= c.relabeling.size(); ++x) out << ' ' << x << "->" << c.relabeling(x);
    out << '\n' << format_profile(c.profile);
    return kPass;
}

inline int verify_command(int n, bool with_oracle, std::ostream& out) {
    if (n > kMaxVerifyN) throw ResourceError("verify is limited to n <= " + std::to_string(kMaxVerifyN));
    if (with_oracle && n > oracle::kMaxBruteForceN) {
        throw ResourceError("verify --oracle is limited to n <= " + std::to_string(oracle::kMaxBruteForceN));
    }
    bool all = true;
    for (const auto& c : run_verification(n, with_oracle)) {
        out << (c.passed ? "PASS  " : "FAIL  ");
        out << c.name << std::string(c.name.size() < 20 ? 20 - c.name.size() : 1, ' ') << c.detail << '\n';
        all = all && c.passed;
    }
    return all ? kPass : kFail;
}

}  // namespace detail

/// Runs the command line `args` (args[0] is the program name) and returns
/// the exit status: 0 pass, 1 fail, 2 usage or input error, 3 refused on size.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Narcissistic, single-peaked and single-crossing preference profiles"};
    app.require_subcommand(1);

    std::string file, property = "sp", axis_text, kind, direction;
    int n = 0;
    long long limit = -1;
    bool count_only = false, with_oracle = false;

    auto* check = app.add_subcommand("check", "Test a profile for a domain property");
    check->add_option("file", file, "Profile document")->required();
    check->add_option("--axis", axis_text, "Fixed axis (or voter order for sc), e.g. 1,2,3,4");
    check->add_option("--property", property, "Property to test")
        ->check(CLI::IsMember({"narcissistic", "sp", "sc", "spn", "scn"}))
        ->capture_default_str();

    auto* count = app.add_subcommand("count", "Print an exact count");
    count->add_option("kind", kind)->required()->check(CLI::IsMember({"spn", "scn", "ssyt", "narcissistic"}));
    count->add_option("--n", n, "Number of voters (tableau order for ssyt)")->required()->check(CLI::PositiveNumber);

    auto* enumerate = app.add_subcommand("enumerate", "Stream canonical profiles or tableaux");
    enumerate->add_option("kind", kind)->required()->check(CLI::IsMember({"spn", "scn", "ssyt"}));
    enumerate->add_option("--n", n, "Number of voters (tableau order for ssyt)")->required()->check(CLI::PositiveNumber);
    enumerate->add_option("--limit", limit, "Stop after this many items");
    enumerate->add_flag("--count-only", count_only, "Print only the number of items");

    auto* map = app.add_subcommand("map", "Apply the profile/tableau bijection");
    map->add_option("direction", direction)->required()->check(CLI::IsMember({"to-ssyt", "to-profile"}));
    map->add_option("file", file, "Input document")->required();

    auto* canon = app.add_subcommand("canonicalize", "Relabel an SPN profile into canonical form");
    canon->add_option("file", file, "Profile document")->required();

    auto* verify = app.add_subcommand("verify", "Run the invariant checks for one size");
    verify->add_option("--n", n, "Number of voters")->required()->check(CLI::Range(2, 1000000));
    verify->add_flag("--oracle", with_oracle, "Also compare against brute force");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kPass : kUsage;
    }

    try {
        if (*check) return detail::check_command(file, property, axis_text, out);
        const std::optional<long long> lim = limit >= 0 || enumerate->count("--limit") ? std::optional(limit) : std::nullopt;
        if (*count) {
            if ((kind == "spn" || kind == "scn") && n < 2) throw detail::UsageError("--n must be at least 2");
            return detail::count_command(kind, n, out);
        }
        if (*enumerate) {
            if ((kind == "spn" || kind == "scn") && n < 2) throw detail::UsageError("--n must be at least 2");
            return detail::enumerate_command(kind, n, lim, count_only, out);
        }
        if (*map) return detail::map_command(direction, file, out);
        if (*canon) return detail::canonicalize_command(file, out);
        return detail::verify_command(n, with_oracle, out);
    } catch (const detail::ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return kResource;
    } catch (const detail::UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
        if (e.code() == ErrorCode::resource_bound) return kResource;
        if (e.code() == ErrorCode::internal_error) return kFail;
        return kUsage;
    }
}

}  // namespace narcissus::cli
