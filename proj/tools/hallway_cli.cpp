// Batch front end: exact maps, statistics, enumeration, identity
// verification, and the BFS length oracle, with json/csv/text output.

#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hallway/affine.hpp"
#include "hallway/identities.hpp"
#include "hallway/invseq.hpp"
#include "hallway/lecturehall.hpp"
#include "hallway/perms.hpp"

namespace {

using nlohmann::json;
using namespace hallway;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitResource = 4;

std::string join_csv(const std::vector<std::string>& fields) {
  std::string out;
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += fields[i];
  }
  return out;
}

// Integers are serialized as decimal strings in JSON so consumers never
// round-trip them through doubles.
json jint(long long v) { return std::to_string(v); }

json intermediates_json(const CosetRep& w) {
  const Decomposition dec = decompose(w);
  const InversionSequence e = psi(dec.sigma);
  const LHPartition lambda = to_lhp(w);
  return json{{"window", format_values(w.window())},
              {"c", format_values(dec.c)},
              {"sigma", format_values(dec.sigma.values())},
              {"e", format_values(e.values())},
              {"lambda", format_values(lambda.parts())}};
}

void print_map(const CosetRep& w, const std::string& format) {
  const json j = intermediates_json(w);
  if (format == "json") {
    std::cout << j.dump() << "\n";
    return;
  }
  std::cout << "window = " << j["window"].get<std::string>() << "\n"
            << "c      = " << j["c"].get<std::string>() << "\n"
            << "sigma  = " << j["sigma"].get<std::string>() << "\n"
            << "e      = " << j["e"].get<std::string>() << "\n"
            << "lambda = " << j["lambda"].get<std::string>() << "\n";
}

int run_map(const std::string& direction, const std::string& input, int n,
            const std::string& format) {
  if (direction == "window-to-lhp") {
    print_map(CosetRep(parse_int_list(input)), format);
    return kExitOk;
  }
  if (direction == "lhp-to-window") {
    std::vector<long long> parts = parse_int_list(input);
    if (n == 0) n = static_cast<int>(parts.size());
    if (n != static_cast<int>(parts.size()))
      throw ParseError("--n disagrees with the partition length");
    print_map(from_lhp(LHPartition(std::move(parts), SSequence::natural(n))), format);
    return kExitOk;
  }
  throw ParseError("direction must be window-to-lhp or lhp-to-window");
}

const std::vector<std::string> kStatsColumns = {
    "n",    "window", "c",    "sigma", "e",   "lambda", "inv_tilde",
    "neg",  "alpha",  "beta", "last",  "max", "odd_inv", "even_inv"};

int run_stats(const std::string& input, const std::string& format) {
  const CosetRep w(parse_int_list(input));
  const Decomposition dec = decompose(w);
  const InversionSequence e = psi(dec.sigma);
  const LHPartition lambda = to_lhp(w);
  const WindowStats st = stats(w);
  if (format == "json") {
    json j = intermediates_json(w);
    j["n"] = jint(w.rank());
    j["inv_tilde"] = jint(st.inv_tilde);
    j["neg"] = jint(st.neg);
    j["alpha"] = jint(st.alpha);
    j["beta"] = jint(st.beta);
    j["last"] = jint(st.last);
    j["max"] = jint(st.max);
    j["odd_inv"] = jint(st.odd_inv);
    j["even_inv"] = jint(st.even_inv);
    std::cout << j.dump() << "\n";
    return kExitOk;
  }
  const std::vector<std::string> row = {
      std::to_string(w.rank()),        format_values(w.window()),
      format_values(dec.c),            format_values(dec.sigma.values()),
      format_values(e.values()),       format_values(lambda.parts()),
      std::to_string(st.inv_tilde),    std::to_string(st.neg),
      std::to_string(st.alpha),        std::to_string(st.beta),
      std::to_string(st.last),         std::to_string(st.max),
      std::to_string(st.odd_inv),      std::to_string(st.even_inv)};
  if (format == "csv") {
    std::cout << join_csv(kStatsColumns) << "\n" << join_csv(row) << "\n";
  } else {
    for (size_t i = 0; i < row.size(); ++i)
      std::cout << kStatsColumns[i] << " = " << row[i] << "\n";
  }
  return kExitOk;
}

int run_enumerate(const std::string& kind, int n, long long max_wn,
                  long long weight, const std::string& s_text,
                  const std::string& format) {
  long long count = 0;
  auto emit = [&](const std::string& text) {
    if (format == "json")
      std::cout << json{{"value", text}}.dump() << "\n";
    else
      std::cout << text << "\n";
    ++count;
  };
  if (kind == "Sn") {
    for_each_permutation(n, [&](const Permutation& p) { emit(format_values(p.values())); });
  } else if (kind == "Cn") {
    for_each_signed_permutation(n, [&](const SignedPermutation& s) {
      emit(format_values(s.values()));
    });
  } else if (kind == "lhp") {
    for_each_lhp_by_weight(SSequence::natural(n), weight,
                           [&](const LHPartition& l) { emit(format_values(l.parts())); });
  } else if (kind == "windows") {
    for_each_coset_rep(n, max_wn,
                       [&](const CosetRep& w) { emit(format_values(w.window())); });
  } else if (kind == "invseq") {
    const SSequence s = s_text.empty()
                            ? SSequence::doubled(n)
                            : SSequence(parse_int_list(s_text));
    for_each_inversion_sequence(
        s, [&](const InversionSequence& e) { emit(format_values(e.values())); });
  } else {
    throw ParseError("unknown enumeration kind: " + kind);
  }
  std::cout << "count " << count << "\n";
  return kExitOk;
}

int run_verify(const std::string& id, const std::map<std::string, long long>& params) {
  const identities::CheckReport report = identities::run_check(id, params);
  std::cout << report.to_json().dump() << "\n";
  return report.equal ? kExitOk : kExitMismatch;
}

int run_length_oracle(const std::string& input, int depth_cap, long long node_cap,
                      const std::string& format) {
  const CosetRep w(parse_int_list(input));
  LengthOracle oracle(w.rank(), depth_cap, static_cast<std::size_t>(node_cap));
  const std::optional<OracleResult> result = oracle.find(w);
  if (!result)
    throw ResourceError("window not reached within depth " + std::to_string(depth_cap));
  json word = json::array();
  for (int g : result->word) word.push_back(g);
  const json j{{"window", format_values(w.window())},
               {"length", jint(result->length)},
               {"word", word},
               {"s0_count", jint(result->s0_count)},
               {"sn_count", jint(result->sn_count)}};
  if (format == "json") {
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "length " << result->length << "\nword";
    for (int g : result->word) std::cout << " s" << g;
    std::cout << "\ns0_count " << result->s0_count << "\nsn_count "
              << result->sn_count << "\n";
  }
  return kExitOk;
}

int run_psi(const std::string& input, bool inverse, const std::string& format) {
  if (inverse) {
    const std::vector<long long> e = parse_int_list(input);
    const int n = static_cast<int>(e.size());
    const SignedPermutation sigma =
        psi_inverse(InversionSequence(e, SSequence::doubled(n)));
    if (format == "json")
      std::cout << json{{"sigma", format_values(sigma.values())}}.dump() << "\n";
    else
      std::cout << format_values(sigma.values()) << "\n";
    return kExitOk;
  }
  const SignedPermutation sigma = parse_signed_permutation(input);
  const InversionSequence e = psi(sigma);
  if (format == "json") {
    std::cout << json{{"s", format_values(e.context().values())},
                      {"e", format_values(e.values())},
                      {"inv_c", jint(inv_c(sigma))},
                      {"des", des_set_signed(sigma)},
                      {"asc", asc_set(e)},
                      {"comaj", jint(comaj(sigma))},
                      {"lhp_c", jint(lhp_c(sigma))}}
                     .dump()
              << "\n";
  } else {
    std::cout << "s=" << format_values(e.context().values())
              << " e=" << format_values(e.values()) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for the affine hyperoctahedral quotient and "
               "lecture hall partitions"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  app.add_option("--format", format)->check(CLI::IsMember({"json", "csv", "text"}));

  int n = 0, k = 0, t = 0, jparam = 0, qcap = -1, xcap = 10, ycap = 10;
  long long max_wn = -1, weight = -1, node_cap = 5'000'000;
  int depth_cap = 14;
  std::string input, direction, kind, identity_id, s_text, caps_text;

  auto* map_cmd = app.add_subcommand("map", "window <-> lecture hall partition");
  map_cmd->add_option("direction", direction)->required();
  map_cmd->add_option("input", input)->required();
  map_cmd->add_option("--n", n);

  auto* stats_cmd = app.add_subcommand("stats", "all statistics of a window");
  stats_cmd->add_option("input", input)->required();

  auto* enum_cmd = app.add_subcommand("enumerate", "streams of Cn/Sn/lhp/windows/invseq");
  enum_cmd->add_option("kind", kind)->required();
  enum_cmd->add_option("--n", n)->required();
  enum_cmd->add_option("--max-wn", max_wn);
  enum_cmd->add_option("--weight", weight);
  enum_cmd->add_option("--s", s_text);

  auto* verify_cmd = app.add_subcommand("verify", "identity verification");
  verify_cmd->add_option("id", identity_id)->required();
  verify_cmd->add_option("--n", n)->required();
  verify_cmd->add_option("--k", k);
  verify_cmd->add_option("--t", t);
  verify_cmd->add_option("--j", jparam);
  verify_cmd->add_option("--qcap", qcap);
  verify_cmd->add_option("--caps", caps_text, "per-variable caps, e.g. x=10,y=10");

  auto* oracle_cmd = app.add_subcommand("length-oracle", "BFS length and reduced word");
  oracle_cmd->add_option("input", input)->required();
  oracle_cmd->add_option("--depth-cap", depth_cap);
  oracle_cmd->add_option("--node-cap", node_cap);

  auto* psi_cmd = app.add_subcommand("psi", "signed permutation <-> inversion sequence");
  psi_cmd->add_option("input", input)->required();
  bool psi_inverse_flag = false;
  psi_cmd->add_flag("--inverse", psi_inverse_flag);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (map_cmd->parsed()) return run_map(direction, input, n, format);
    if (stats_cmd->parsed()) return run_stats(input, format);
    if (enum_cmd->parsed()) {
      if (kind == "windows" && max_wn < 0) throw ParseError("windows needs --max-wn");
      if (kind == "lhp" && weight < 0) throw ParseError("lhp needs --weight");
      return run_enumerate(kind, n, max_wn, weight, s_text, format);
    }
    if (verify_cmd->parsed()) {
      std::map<std::string, long long> params{{"n", n}};
      if (verify_cmd->count("--k")) params["k"] = k;
      if (verify_cmd->count("--t")) params["t"] = t;
      if (verify_cmd->count("--j")) params["j"] = jparam;
      if (verify_cmd->count("--qcap")) params["qcap"] = qcap;
      if (!caps_text.empty()) {
        // x=10,y=10 style per-variable caps.
        std::stringstream ss(caps_text);
        std::string item;
        while (std::getline(ss, item, ',')) {
          const size_t eq = item.find('=');
          if (eq == std::string::npos) throw ParseError("bad --caps entry: " + item);
          params[item.substr(0, eq) + "cap"] = std::stoll(item.substr(eq + 1));
        }
      }
      return run_verify(identity_id, params);
    }
    if (oracle_cmd->parsed())
      return run_length_oracle(input, depth_cap, node_cap, format);
    if (psi_cmd->parsed()) return run_psi(input, psi_inverse_flag, format);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitResource;
  } catch (const DomainError& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
