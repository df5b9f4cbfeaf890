#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>

#include <CLI11.hpp>
#include <json.hpp>

#include "fibgray/fibgray.hpp"

namespace fibgray::cli {
namespace {

using nlohmann::json;

/// A failure that maps straight onto an exit code.
struct Exit {
  int code;
  std::string message;
};

SequenceSpec make_spec(const CliConfig& cfg) {
  auto need = [&](const std::optional<unsigned>& v, const char* flag) {
    if (!v) {
      throw Exit{kUsage, "--seq " + cfg.sequence + " requires " + flag};
    }
    return *v;
  };
  SequenceSpec spec;
  if (cfg.sequence == "kbonacci") {
    spec = KBonacci{need(cfg.k, "--k")};
  } else if (cfg.sequence == "pell") {
    spec = Pell{};
  } else if (cfg.sequence == "pow2") {
    spec = PowersOfTwo{};
  } else if (cfg.sequence == "linplus") {
    spec = LinearPlus{need(cfg.k, "--k"), need(cfg.h, "--h")};
  } else if (cfg.sequence == "linminus") {
    spec = LinearMinus{need(cfg.k, "--k"), need(cfg.h, "--h")};
  } else {
    throw Exit{kUsage, "unknown sequence '" + cfg.sequence + "'"};
  }
  try {
    validate(spec);
  } catch (const InvalidSpec& e) {
    throw Exit{kUsage, e.what()};
  }
  return spec;
}

NumerationBasis make_basis(const CliConfig& cfg) {
  try {
    return NumerationBasis(make_spec(cfg));
  } catch (const NonMonotonicSequence& e) {
    throw Exit{kUsage, e.what()};
  }
}

SizeGuard make_guard(const CliConfig& cfg) {
  SizeGuard guard;
  guard.force = cfg.force;
  if (cfg.max_elements) {
    guard.max_elements = *cfg.max_elements;
  } else if (const char* env = std::getenv(kMaxElementsEnv)) {
    try {
      guard.max_elements = std::stoull(env);
    } catch (const std::exception&) {
      throw Exit{kUsage, std::string(kMaxElementsEnv) + " is not a number"};
    }
  }
  return guard;
}

void require_budget(const SizeGuard& guard, const Natural& count,
                    const std::string& what) {
  if (!guard.allows_elements(saturating_u64(count))) {
    throw Exit{kSizeGuard, what + ": " + count.str() +
                               " elements exceed size guard " +
                               std::to_string(guard.max_elements) +
                               " (use --force or --max-elements)"};
  }
}

json params_json(const CliConfig& cfg) {
  json p;
  if (!cfg.sequence.empty()) p["sequence"] = cfg.sequence;
  if (cfg.k) p["k"] = *cfg.k;
  if (cfg.h) p["h"] = *cfg.h;
  p["m"] = cfg.length;
  return p;
}

json count_json(const Natural& n) {
  const std::uint64_t v = saturating_u64(n);
  if (v == std::numeric_limits<std::uint64_t>::max()) return n.str();
  return v;
}

/// Writes {"kind", "params", "count", "items": [...]} incrementally, so
/// streaming commands never hold the item list.
class JsonStream {
 public:
  JsonStream(std::ostream& out, const std::string& kind, const json& params,
             const json& count)
      : out_(out) {
    out_ << "{\"kind\":" << json(kind).dump() << ",\"params\":" << params.dump()
         << ",\"count\":" << count.dump() << ",\"items\":[";
  }
  void item(const json& value) {
    if (!first_) out_ << ',';
    first_ = false;
    out_ << value.dump();
  }
  void finish() { out_ << "]}\n"; }

 private:
  std::ostream& out_;
  bool first_ = true;
};

json perm_json(std::span<const Entry> entries) {
  return json(std::vector<Entry>(entries.begin(), entries.end()));
}

std::string perm_text(std::span<const Entry> entries) {
  std::string out;
  const bool compact = entries.size() <= 9;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!compact && i) out.push_back(' ');
    out += std::to_string(entries[i]);
  }
  return out;
}

std::string digits_text(std::span<const Digit> d, bool dotted) {
  return DigitString(std::vector<Digit>(d.begin(), d.end())).to_text(dotted);
}

// ---------------------------------------------------------------- commands

int cmd_encode(const CliConfig& cfg, const std::string& value,
               std::ostream& out) {
  const NumerationBasis basis = make_basis(cfg);
  Natural n;
  try {
    n = parse_natural(value);
  } catch (const ParseError& e) {
    throw Exit{kUsage, e.what()};
  }
  const DigitString s = encode(basis, n);
  out << s.to_text(basis.alphabet_for_length(s.size()) > 9) << '\n';
  return kOk;
}

int cmd_decode(const CliConfig& cfg, const std::string& text, bool strict,
               std::ostream& out) {
  const NumerationBasis basis = make_basis(cfg);
  DigitString s;
  try {
    s = DigitString::parse(text);
  } catch (const ParseError& e) {
    throw Exit{kUsage, e.what()};
  }
  // Validity subsumes the per-position bound, so strict mode checks it first.
  if (strict && !is_valid(basis, s)) {
    throw Exit{kStrictInvalid,
               "'" + text + "' is not a valid representation in " + basis.tag()};
  }
  try {
    out << decode(basis, s).str() << '\n';
  } catch (const DigitOutOfRange& e) {
    throw Exit{kBadDigit, e.what()};
  }
  return kOk;
}

int cmd_list(const CliConfig& cfg, std::ostream& out) {
  const NumerationBasis basis = make_basis(cfg);
  const SizeGuard guard = make_guard(cfg);
  const std::size_t m = cfg.length;
  const Natural& count = basis.term(m);
  require_budget(guard, count, "list");
  const bool dotted = basis.alphabet_for_length(m) > 9;

  std::optional<JsonStream> js;
  if (cfg.format == OutputFormat::Json)
    js.emplace(out, "language", params_json(cfg), count_json(count));
  for (Natural l = 0; l < count; ++l) {
    const std::string text = pad(encode(basis, l), m).to_text(dotted);
    if (js) js->item(text);
    else out << text << '\n';
  }
  if (js) js->finish();
  return kOk;
}

int cmd_gray(const CliConfig& cfg, bool check, std::ostream& out,
             std::ostream& err) {
  const NumerationBasis basis = make_basis(cfg);
  const SizeGuard guard = make_guard(cfg);
  const std::size_t m = cfg.length;
  std::optional<GrayCursor> cursor;
  if (const auto* kb = std::get_if<KBonacci>(&basis.spec())) {
    cursor.emplace(gray_language(kb->k, m));
  } else if (std::holds_alternative<PowersOfTwo>(basis.spec())) {
    cursor.emplace(brgc_cursor(m));
  } else {
    throw Exit{kUsage, "gray is available for --seq kbonacci and --seq pow2"};
  }
  const Natural& count = basis.term(m);
  require_budget(guard, count, "gray");

  std::optional<JsonStream> js;
  if (cfg.format == OutputFormat::Json)
    js.emplace(out, "gray", params_json(cfg), count_json(count));
  std::vector<Digit> previous;
  bool have_previous = false;
  for (; !cursor->done(); cursor->advance()) {
    const auto cur = cursor->current_digits();
    if (check && have_previous && hamming(previous, cur) != 1) {
      out.flush();
      err << "self-check failed: " << digits_text(previous, false) << " -> "
          << digits_text(cur, false) << " differ in "
          << hamming(previous, cur) << " positions\n";
      return kSelfCheckFailure;
    }
    const std::string text = digits_text(cur, false);
    if (js) js->item(text);
    else out << text << '\n';
    if (check) {
      previous.assign(cur.begin(), cur.end());
      have_previous = true;
    }
  }
  if (check && Natural(cursor->emitted()) != count) {
    err << "self-check failed: emitted " << cursor->emitted()
        << " strings, expected " << count.str() << '\n';
    return kSelfCheckFailure;
  }
  if (js) js->finish();
  return kOk;
}

int cmd_perms(const CliConfig& cfg, bool gray, bool check, bool strings,
              std::ostream& out, std::ostream& err) {
  if (!cfg.k) throw Exit{kUsage, "perms requires --k"};
  const unsigned k = *cfg.k;
  if (k < 2) throw Exit{kUsage, "perms requires k >= 2"};
  if (strings && cfg.format == OutputFormat::Json)
    throw Exit{kUsage, "--strings is only available with line output"};
  const SizeGuard guard = make_guard(cfg);
  const std::size_t m = cfg.length;
  const std::uint64_t count = perm_class_count(k, m);
  require_budget(guard, Natural(count), "perms");

  std::optional<JsonStream> js;
  if (cfg.format == OutputFormat::Json)
    js.emplace(out, gray ? "gray_perms" : "perms", params_json(cfg), count);
  auto emit = [&](std::span<const Entry> p) {
    if (js) {
      js->item(perm_json(p));
      return;
    }
    out << perm_text(p);
    if (strings) {
      const Permutation perm(std::vector<Entry>(p.begin(), p.end()));
      out << ' ' << (perm.empty() ? std::string() : string_from_perm(perm).to_digits().to_text());
    }
    out << '\n';
  };

  if (!gray) {
    for (const auto& p : perm_set(k, m, guard)) {
      if (check && !p.empty() && !in_class(p, k)) {
        err << "self-check failed: " << p.to_text() << " is outside the class\n";
        return kSelfCheckFailure;
      }
      emit(p.entries());
    }
  } else {
    PermGrayCursor cursor(k, m);
    std::optional<Permutation> previous;
    for (; !cursor.done(); cursor.advance()) {
      if (check) {
        Permutation cur = cursor.current();
        if (previous && !adjacent_transposition_delta(*previous, cur)) {
          out.flush();
          err << "self-check failed: " << previous->to_text() << " -> "
              << cur.to_text() << " is not an adjacent transposition\n";
          return kSelfCheckFailure;
        }
        previous = std::move(cur);
      }
      emit(cursor.current_entries());
    }
  }
  if (js) js->finish();
  return kOk;
}

// ------------------------------------------------------------------ verify

using Reports = std::vector<OracleReport>;

std::size_t capped(std::size_t requested, std::size_t limit, const char* suite,
                   std::ostream& err) {
  if (requested > limit) {
    err << "note: " << suite << " suite capped at length " << limit << '\n';
    return limit;
  }
  return requested;
}

std::string params_text(const std::string& tag, std::size_t m) {
  return tag + ", m=" + std::to_string(m);
}

void verify_uniqueness(const NumerationBasis& basis, std::size_t max_len,
                       const SizeGuard& guard, Reports& reports,
                       std::ostream& err) {
  const std::size_t top = capped(max_len, kMaxUniquenessLength, "uniqueness", err);
  for (std::size_t m = 0; m <= top; ++m) {
    reports.push_back(oracle_unique_representation(basis, m, guard));
  }
}

void verify_strings(unsigned k, std::size_t max_len, const SizeGuard& guard,
                    Reports& reports, std::ostream& err) {
  const NumerationBasis basis(KBonacci{k});
  const std::size_t top = capped(max_len, kMaxOracleStringLength, "strings", err);
  for (std::size_t m = 0; m <= top; ++m) {
    const auto filtered = oracle_filter_strings(k, m, guard);
    const std::string params = params_text(basis.tag(), m);
    reports.push_back(compare_string_sets("strings/by_counting", params,
                                          filtered,
                                          language_by_counting(basis, m, guard).elements));
    reports.push_back(compare_string_sets("strings/by_recursion", params,
                                          filtered,
                                          language_by_recursion(k, m, guard).elements));
  }
}

void verify_perms(unsigned k, std::size_t max_len, const SizeGuard& guard,
                  Reports& reports, std::ostream& err) {
  const std::string tag = describe(KBonacci{k});
  const std::size_t top = capped(max_len, kMaxOraclePermLength, "perms", err);
  for (std::size_t m = 1; m <= top; ++m) {
    const auto filtered = oracle_filter_perms(k, m, guard);
    const std::string params = params_text(tag, m);
    reports.push_back(
        compare_perm_sets("perms/perm_set", params, filtered, perm_set(k, m, guard)));
    reports.push_back(
        compare_perm_sets("perms/gray_perms", params, filtered, gray_perms(k, m, guard)));
    std::vector<Permutation> characterized;
    for (const auto& p : filtered) {
      if (in_class(p, k)) characterized.push_back(p);
    }
    reports.push_back(compare_perm_sets("perms/in_class", params, filtered,
                                        std::move(characterized)));
  }
}

OracleReport sweep_strings(const std::string& check, const std::string& params,
                           GrayCursor cursor, std::vector<DigitString> expected) {
  std::vector<DigitString> seen;
  seen.reserve(expected.size());
  for (; !cursor.done(); cursor.advance()) {
    DigitString cur = cursor.current();
    if (!seen.empty() && hamming(seen.back(), cur) != 1) {
      return OracleReport::disagreed(check, params, seen.size(),
                                     seen.back().to_text() + " -> " + cur.to_text());
    }
    seen.push_back(std::move(cur));
  }
  return compare_string_sets(check, params, std::move(expected), std::move(seen));
}

void verify_gray(const NumerationBasis& basis, std::size_t max_len,
                 const SizeGuard& guard, Reports& reports) {
  if (std::holds_alternative<PowersOfTwo>(basis.spec())) {
    for (std::size_t m = 0; m <= max_len; ++m) {
      reports.push_back(sweep_strings("gray/brgc", params_text(basis.tag(), m),
                                      brgc_cursor(m),
                                      binary_strings(m, guard).elements));
    }
    return;
  }
  const unsigned k = std::get<KBonacci>(basis.spec()).k;
  for (std::size_t m = 0; m <= max_len; ++m) {
    reports.push_back(sweep_strings("gray/strings", params_text(basis.tag(), m),
                                    gray_language(k, m),
                                    language_by_recursion(k, m, guard).elements));
  }
  for (std::size_t m = 1; m <= max_len; ++m) {
    const std::string params = params_text(basis.tag(), m);
    PermGrayCursor cursor(k, m);
    std::optional<Permutation> previous;
    std::vector<Permutation> seen;
    std::optional<OracleReport> failure;
    for (; !cursor.done(); cursor.advance()) {
      Permutation cur = cursor.current();
      if (previous && !adjacent_transposition_delta(*previous, cur)) {
        failure = OracleReport::disagreed("gray/perms", params, seen.size(),
                                          previous->to_text() + " -> " + cur.to_text());
        break;
      }
      previous = cur;
      seen.push_back(std::move(cur));
    }
    reports.push_back(failure ? *failure
                              : compare_perm_sets("gray/perms", params,
                                                  perm_set(k, m, guard),
                                                  std::move(seen)));
  }
}

int cmd_verify(const CliConfig& cfg, const std::string& suite,
               std::size_t max_len, std::ostream& out, std::ostream& err) {
  static const std::set<std::string> kSuites = {"uniqueness", "strings", "perms",
                                                "gray", "all"};
  if (!kSuites.count(suite)) throw Exit{kUsage, "unknown suite '" + suite + "'"};
  const NumerationBasis basis = make_basis(cfg);
  const SizeGuard guard = make_guard(cfg);
  const auto* kb = std::get_if<KBonacci>(&basis.spec());
  const bool all = suite == "all";
  const bool gray_capable = kb || std::holds_alternative<PowersOfTwo>(basis.spec());

  if (!all && (suite == "strings" || suite == "perms") && !kb)
    throw Exit{kUsage, suite + " suite requires --seq kbonacci"};
  if (!all && suite == "gray" && !gray_capable)
    throw Exit{kUsage, "gray suite requires --seq kbonacci or --seq pow2"};

  Reports reports;
  if (all || suite == "uniqueness") verify_uniqueness(basis, max_len, guard, reports, err);
  if (kb && (all || suite == "strings")) verify_strings(kb->k, max_len, guard, reports, err);
  if (kb && (all || suite == "perms")) verify_perms(kb->k, max_len, guard, reports, err);
  if (gray_capable && (all || suite == "gray")) verify_gray(basis, max_len, guard, reports);

  const bool ok = std::all_of(reports.begin(), reports.end(),
                              [](const OracleReport& r) { return r.agree(); });
  if (cfg.format == OutputFormat::Json) {
    json items = json::array();
    for (const auto& r : reports) {
      json j{{"check", r.check},
             {"params", r.params},
             {"status", r.agree() ? "agree" : "disagree"},
             {"count", r.count}};
      if (r.counterexample) j["counterexample"] = *r.counterexample;
      items.push_back(std::move(j));
    }
    json p = params_json(cfg);
    p.erase("m");
    p["max_len"] = max_len;
    p["suite"] = suite;
    out << json{{"kind", "verify"}, {"params", p}, {"count", reports.size()},
                {"items", items}}
               .dump()
        << '\n';
  } else {
    for (const auto& r : reports) out << r << '\n';
  }
  return ok ? kOk : kVerificationFailure;
}

void add_common(CLI::App* sub, CliConfig& cfg, bool with_sequence) {
  // "-h" would clash with the --h sequence parameter.
  sub->set_help_flag("--help", "Print this help message and exit");
  if (with_sequence) {
    sub->add_option("--seq", cfg.sequence,
                    "Sequence: kbonacci, pell, pow2, linplus, linminus")
        ->required()
        ->check(CLI::IsMember({"kbonacci", "pell", "pow2", "linplus", "linminus"}));
  }
  sub->add_option("--k", cfg.k, "Sequence parameter k");
  if (with_sequence) sub->add_option("--h", cfg.h, "Sequence parameter h");
  sub->add_flag("--force", cfg.force, "Ignore the size guard");
  sub->add_option("--max-elements", cfg.max_elements,
                  std::string("Size guard (default 2^22, or $") + kMaxElementsEnv + ")");
}

void add_format(CLI::App* sub, CliConfig& cfg) {
  sub->add_flag_function(
      "--json",
      [&cfg](std::int64_t) { cfg.format = OutputFormat::Json; },
      "Emit a JSON document instead of lines");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Numeration systems, 1^k-avoiding strings and their Gray codes",
               "fibgray"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  CliConfig cfg;
  std::function<int()> action;

  std::string number;
  auto* enc = app.add_subcommand("encode", "Greedy representation of N");
  add_common(enc, cfg, true);
  enc->add_option("N", number, "Non-negative integer")->required();
  enc->callback([&] { action = [&] { return cmd_encode(cfg, number, out); }; });

  std::string digits;
  bool strict = false;
  auto* dec = app.add_subcommand("decode", "Value of a digit string");
  add_common(dec, cfg, true);
  dec->add_option("digits", digits, "Digit string, most significant first")->required();
  dec->add_flag("--strict", strict, "Reject strings that are not greedy representations");
  dec->callback([&] { action = [&] { return cmd_decode(cfg, digits, strict, out); }; });

  auto* list = app.add_subcommand("list", "Padded representations of 0 .. a_m - 1");
  add_common(list, cfg, true);
  add_format(list, cfg);
  list->add_option("--len", cfg.length, "String length m")->required();
  list->callback([&] { action = [&] { return cmd_list(cfg, out); }; });

  bool check = false;
  auto* gray = app.add_subcommand("gray", "Stream the Gray code of the language");
  add_common(gray, cfg, true);
  add_format(gray, cfg);
  gray->add_option("--len", cfg.length, "String length m")->required();
  gray->add_flag("--check", check, "Verify Hamming distance 1 while streaming");
  gray->callback([&] { action = [&] { return cmd_gray(cfg, check, out, err); }; });

  bool gray_order = false;
  bool strings = false;
  auto* perms = app.add_subcommand("perms", "Permutations avoiding 321, 312, 23...(k+1)1");
  add_common(perms, cfg, false);
  add_format(perms, cfg);
  perms->add_option("--len", cfg.length, "Permutation length m")->required();
  perms->add_flag("--gray", gray_order, "Adjacent-transposition Gray order");
  perms->add_flag("--check", check, "Verify each step while streaming");
  perms->add_flag("--strings", strings, "Append the inversion array");
  perms->callback([&] {
    cfg.sequence = "kbonacci";
    action = [&] { return cmd_perms(cfg, gray_order, check, strings, out, err); };
  });

  std::string suite;
  std::size_t max_len = 0;
  auto* verify = app.add_subcommand("verify", "Compare constructions with brute-force oracles");
  add_common(verify, cfg, true);
  add_format(verify, cfg);
  verify->add_option("--max-len", max_len, "Largest length checked")->required();
  verify->add_option("suite", suite, "uniqueness, strings, perms, gray or all")->required();
  verify->callback([&] {
    action = [&] { return cmd_verify(cfg, suite, max_len, out, err); };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    return action();
  } catch (const Exit& e) {
    err << "error: " << e.message << '\n';
    return e.code;
  } catch (const SizeGuardExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kSizeGuard;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace fibgray::cli
