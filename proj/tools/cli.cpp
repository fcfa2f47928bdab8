#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gbdecode/code_spec.hpp"
#include "gbdecode/decoder.hpp"
#include "gbdecode/error.hpp"
#include "gbdecode/precompute.hpp"
#include "gbdecode/verify.hpp"
#include "json.hpp"

namespace gbdecode::cli {

namespace {

struct UsageError : Error {
  using Error::Error;
};

CodeSpec resolve_spec(const std::string& code) {
  constexpr std::string_view prefix = "builtin:";
  if (code.rfind(prefix, 0) == 0) {
    const std::string name = code.substr(prefix.size());
    if (auto spec = builtin_spec(name)) return *spec;
    throw UsageError("no buildable catalog entry named '" + name + "'");
  }
  return load_code_spec(code);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Bits "0110..." with one character per coordinate, or hex "0x..." whose
// least significant bit is coordinate 0.
Word parse_word(const std::string& text, unsigned n) {
  Word word(n, 0);
  if (text.rfind("0x", 0) == 0 || text.rfind("0X", 0) == 0) {
    const std::string digits = text.substr(2);
    if (digits.empty()) throw UsageError("empty hex word");
    for (std::size_t k = 0; k < digits.size(); ++k) {
      const char c = digits[digits.size() - 1 - k];
      int v;
      if (c >= '0' && c <= '9') v = c - '0';
      else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
      else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
      else throw UsageError(std::string("invalid hex digit '") + c + "'");
      for (unsigned b = 0; b < 4; ++b) {
        if (!((v >> b) & 1)) continue;
        const std::size_t pos = 4 * k + b;
        if (pos >= n) throw UsageError("hex word has bits beyond length " + std::to_string(n));
        word[pos] = 1;
      }
    }
    return word;
  }
  if (text.size() != n)
    throw UsageError("word has length " + std::to_string(text.size()) + ", the code has length " + std::to_string(n));
  for (unsigned i = 0; i < n; ++i) {
    if (text[i] != '0' && text[i] != '1') throw UsageError("word must consist of 0 and 1 or start with 0x");
    word[i] = static_cast<std::uint8_t>(text[i] - '0');
  }
  return word;
}

std::string bits(const Word& w) {
  std::string s;
  for (auto b : w) s += static_cast<char>('0' + b);
  return s;
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv(kBudgetEnv)) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    throw UsageError(std::string(kBudgetEnv) + " must be a positive integer");
  }
  return PrecomputeOptions{}.max_pairs;
}

struct PrecomputeArgs {
  std::string code, variant = "saturated", out, order = "lex", stamp;
  std::optional<unsigned> w_max;
  std::optional<std::uint64_t> budget;
  bool parallel = false, trace = false;
};

int cmd_precompute(const PrecomputeArgs& a, std::ostream& out, std::ostream& err) {
  const CyclicCode code = build_code(resolve_spec(a.code));
  PrecomputeOptions options;
  options.variant = parse_variant(a.variant);
  options.w_max = a.w_max;
  options.max_pairs = a.budget ? *a.budget : default_budget();
  options.order = a.order;
  options.parallel = a.parallel;
  options.stamp = a.stamp;
  std::ostringstream trace;
  options.trace = &trace;

  const auto start = std::chrono::steady_clock::now();
  PrecomputeResult result;
  try {
    result = precompute(code, options);
  } catch (const BudgetExhausted& e) {
    err << "error: " << e.what() << "\n" << e.trace();
    return kBudgetExhausted;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (a.trace) err << trace.str();

  const std::string text = serialize(result.formulas);
  {
    std::ofstream file(a.out, std::ios::binary | std::ios::trunc);
    if (!file) throw UsageError("cannot write " + a.out);
    file << text;
  }
  for (const auto& basis : result.bases) {
    const auto& s = basis.stats;
    const unsigned w = static_cast<unsigned>(&basis - result.bases.data()) + 1;
    out << "w=" << w << " basis=" << s.final_basis_size << " peak=" << s.peak_basis_size
        << " pairs=" << s.pairs_processed << "/" << s.pairs_created << " coprime=" << s.coprime_skips
        << " chain=" << s.chain_skips << " zero=" << s.zero_reductions << "\n";
  }
  out << "wrote " << a.out << " (" << to_string(options.variant) << ", w_max=" << result.formulas.w_max() << ", "
      << std::fixed << std::setprecision(2) << seconds << "s)\n";
  return kOk;
}

struct DecodeArgs {
  std::string code, formulas, word;
  bool json = false;
};

int cmd_decode(const DecodeArgs& a, std::ostream& out) {
  const CyclicCode code = build_code(resolve_spec(a.code));
  const FormulaSet fs = deserialize(read_file(a.formulas));
  const Word word = parse_word(a.word, code.length());
  check_compatible(code, fs);
  const DecodeResult r = decode(word, code, fs);

  if (a.json) {
    nlohmann::ordered_json j;
    j["status"] = to_string(r.status);
    j["word"] = bits(r.word);
    j["errors"] = r.error.positions();
    j["weight"] = r.weight ? nlohmann::ordered_json(*r.weight) : nlohmann::ordered_json(nullptr);
    j["path"] = to_string(r.path);
    j["sigma"] = r.sigma;
    if (r.path == Variant::FieldEq) j["relations"] = r.relations_used;
    j["diagnostic"] = r.diagnostic;
    out << j.dump() << "\n";
  } else {
    out << "status: " << to_string(r.status) << "\n";
    out << "word: " << bits(r.word) << "\n";
    if (r.weight) out << "weight: " << *r.weight << "\n";
    if (r.ok()) out << "errors: " << r.error.to_string() << "\n";
    if (!r.diagnostic.empty()) out << "diagnostic: " << r.diagnostic << "\n";
  }
  switch (r.status) {
    case DecodeStatus::Ok:
      return kOk;
    case DecodeStatus::Uncorrectable:
      return kUncorrectable;
    case DecodeStatus::DecodeFailure:
      return kDecodeFailure;
  }
  return kDecodeFailure;
}

struct VerifyArgs {
  std::string code, formulas;
  bool exhaustive = false;
  unsigned samples = 10;
  std::uint64_t seed = 1;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const CyclicCode code = build_code(resolve_spec(a.code));
  const FormulaSet fs = deserialize(read_file(a.formulas));
  VerifyOptions options;
  options.exhaustive = a.exhaustive;
  options.random_codewords = a.samples;
  options.seed = a.seed;
  const VerifyReport report = verify(code, fs, options);
  out << report.to_text();
  if (!report.checks.empty() && report.checks.front().name == "compatible" && !report.checks.front().passed)
    return kArtifactMismatch;
  return report.passed() ? kOk : kVerifyFailed;
}

int cmd_catalog(const std::string& show, std::ostream& out) {
  if (!show.empty()) {
    auto spec = builtin_spec(show);
    if (!spec) throw UsageError("no buildable catalog entry named '" + show + "'");
    out << to_text(*spec);
    return kOk;
  }
  out << std::left << std::setw(10) << "name" << std::setw(6) << "n" << std::setw(5) << "m" << std::setw(5) << "d"
      << std::setw(5) << "t" << std::setw(11) << "status" << "description\n";
  for (const auto& e : catalog()) {
    const std::string d = e.distance ? std::to_string(*e.distance) : "-";
    const std::string t = e.distance ? std::to_string((*e.distance - 1) / 2) : "-";
    const std::string status = !e.buildable ? "metadata" : e.stretch ? "stretch" : "buildable";
    out << std::setw(10) << e.name << std::setw(6) << e.n << std::setw(5) << e.m << std::setw(5) << d
        << std::setw(5) << t << std::setw(11) << status << e.description << "\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"One-step decoding of binary cyclic codes from Groebner-basis formulas", "gbdecode"};
  app.require_subcommand(1);

  PrecomputeArgs pre;
  auto* precompute_cmd = app.add_subcommand("precompute", "Compute the criteria and formulas for a code");
  precompute_cmd->add_option("--code", pre.code, "Code spec file or builtin:<name>")->required();
  precompute_cmd->add_option("--variant", pre.variant, "saturated or fieldeq")
      ->check(CLI::IsMember({"saturated", "fieldeq"}));
  precompute_cmd->add_option("--wmax", pre.w_max, "Largest weight (default: t)");
  precompute_cmd->add_option("--out", pre.out, "Formula file to write")->required();
  precompute_cmd->add_option("--budget", pre.budget, std::string("Pair budget per basis (default 1e7, or $") +
                                                         kBudgetEnv + ")");
  precompute_cmd->add_option("--order", pre.order, "lex, block, or an explicit order description");
  precompute_cmd->add_option("--stamp", pre.stamp, "Free-form stamp stored in the file");
  precompute_cmd->add_flag("--parallel", pre.parallel, "Compute weights concurrently");
  precompute_cmd->add_flag("--trace", pre.trace, "Print the Groebner basis trace to stderr");

  DecodeArgs dec;
  auto* decode_cmd = app.add_subcommand("decode", "Decode one received word");
  decode_cmd->add_option("--code", dec.code, "Code spec file or builtin:<name>")->required();
  decode_cmd->add_option("--formulas", dec.formulas, "Formula file")->required();
  decode_cmd->add_option("--word", dec.word, "0/1 string or 0x hex (bit i = coordinate i)")->required();
  decode_cmd->add_flag("--json", dec.json, "JSON output");

  VerifyArgs ver;
  auto* verify_cmd = app.add_subcommand("verify", "Check a formula file against its code");
  verify_cmd->add_option("--code", ver.code, "Code spec file or builtin:<name>")->required();
  verify_cmd->add_option("--formulas", ver.formulas, "Formula file")->required();
  verify_cmd->add_flag("--exhaustive", ver.exhaustive, "Include weight w_max+1 and all codewords when k <= 8");
  verify_cmd->add_option("--samples", ver.samples, "Random codewords to decode on");
  verify_cmd->add_option("--seed", ver.seed, "Seed for the codeword sample");

  std::string show;
  auto* catalog_cmd = app.add_subcommand("catalog", "List the built-in codes");
  catalog_cmd->add_option("--show", show, "Print the spec file of a buildable entry");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*precompute_cmd) return cmd_precompute(pre, out, err);
    if (*decode_cmd) return cmd_decode(dec, out);
    if (*verify_cmd) return cmd_verify(ver, out);
    return cmd_catalog(show, out);
  } catch (const ArtifactMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kArtifactMismatch;
  } catch (const BudgetExhausted& e) {
    err << "error: " << e.what() << "\n" << e.trace();
    return kBudgetExhausted;
  } catch (const ConsistencyError& e) {
    err << "error: " << e.what() << "\n";
    return kDecodeFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace gbdecode::cli
