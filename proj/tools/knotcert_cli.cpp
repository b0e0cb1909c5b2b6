// knotcert command-line front end. Talks to the shared library through the C
// API only; everything here is argument handling and report formatting.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "knotcert.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitLimit = 4;

int exit_code_for(kc_error err) {
  switch (err) {
    case KC_OK: return kExitOk;
    case KC_ERROR_PARSE:
    case KC_ERROR_INVALID: return kExitParse;
    case KC_ERROR_LIMIT: return kExitLimit;
    default: return kExitFailure;
  }
}

[[noreturn]] void fail(kc_error err) {
  std::cerr << "error: " << kc_last_error() << "\n";
  std::exit(exit_code_for(err));
}

// argument is either a readable file or literal diagram text
std::string load_input(const std::string& arg) {
  std::ifstream in(arg);
  if (in.good()) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return arg;
}

struct StringHolder {
  char* s = nullptr;
  ~StringHolder() { kc_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

struct DiagramHolder {
  kc_diagram* d = nullptr;
  ~DiagramHolder() { kc_diagram_free(d); }
};

int default_limit() {
  if (const char* env = std::getenv("KNOTCERT_BRACKET_LIMIT")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 24;
}

kc_error parse_diagram(const std::string& text, const std::string& format, int strands,
                       kc_diagram** out) {
  if (format == "pd") return kc_parse_pd(text.c_str(), out);
  if (format == "gauss") return kc_parse_gauss(text.c_str(), out);
  return kc_parse_braid(text.c_str(), strands, out);
}

// ---------------------------------------------------------------------------
// batch corpus

struct CorpusEntry {
  std::string name;
  std::string pd;
  std::optional<bool> good;
  std::optional<int> chi;
  std::optional<int> span;
};

std::vector<CorpusEntry> read_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) {
    std::cerr << "error: cannot read corpus file " << path << "\n";
    std::exit(kExitParse);
  }
  std::vector<CorpusEntry> entries;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    CorpusEntry e;
    if (!(ls >> e.name)) continue;
    std::string tok;
    bool expectations = false;
    while (ls >> tok) {
      if (tok == "|") {
        expectations = true;
        continue;
      }
      if (!expectations) {
        if (!e.pd.empty()) e.pd += ' ';
        e.pd += tok;
      } else {
        auto eq = tok.find('=');
        if (eq == std::string::npos) continue;
        std::string key = tok.substr(0, eq);
        int value = std::atoi(tok.c_str() + eq + 1);
        if (key == "good") e.good = value != 0;
        else if (key == "chi") e.chi = value;
        else if (key == "span") e.span = value;
      }
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

int run_batch(const std::string& path, int limit) {
  auto entries = read_corpus(path);
  std::printf("%-16s %3s  %-18s %-5s %4s %5s  %s\n", "name", "n", "verdict", "good",
              "chi", "span", "check");
  std::size_t parse_errors = 0, mismatches = 0;
  for (const auto& e : entries) {
    DiagramHolder d;
    kc_error err = kc_parse_pd(e.pd.c_str(), &d.d);
    if (err != KC_OK) {
      std::printf("%-16s %3s  %-18s %-5s %4s %5s  parse-error: %s\n", e.name.c_str(), "-",
                  "-", "-", "-", "-", kc_last_error());
      ++parse_errors;
      continue;
    }
    StringHolder cert;
    err = kc_certificate_json(d.d, "classical", limit, &cert.s);
    if (err != KC_OK) fail(err);
    auto j = nlohmann::json::parse(cert.str());
    bool good = j["good"].get<bool>();
    int chi = j["chi"].get<int>();
    std::optional<int> span;
    if (!j["span"].is_null()) span = j["span"].get<int>();
    std::string verdict = j["verdict"].get<std::string>();
    auto n = j["n"].get<std::size_t>();

    std::vector<std::string> bad;
    if (e.good && *e.good != good) bad.push_back("good");
    if (e.chi && *e.chi != chi) bad.push_back("chi");
    if (e.span && (!span || *e.span != *span)) bad.push_back("span");
    std::string check = "ok";
    if (!bad.empty()) {
      ++mismatches;
      check = "MISMATCH(";
      for (std::size_t i = 0; i < bad.size(); ++i) check += (i ? "," : "") + bad[i];
      check += ")";
    }
    std::string span_text = span ? std::to_string(*span) : "null";
    std::printf("%-16s %3zu  %-18s %-5s %4d %5s  %s\n", e.name.c_str(), n, verdict.c_str(),
                good ? "yes" : "no", chi, span_text.c_str(), check.c_str());
  }
  std::printf("total %zu entries, %zu parse errors, %zu mismatches\n", entries.size(),
              parse_errors, mismatches);
  if (parse_errors) return kExitParse;
  return mismatches ? kExitFailure : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certify crossing-number minimality of knot diagrams"};
  app.require_subcommand(1);

  std::string input, input2, format = "pd", category = "classical", corpus;
  int strands = 0, limit = default_limit(), cable_k = 0;
  unsigned arc1 = 0, arc2 = 0;
  bool json_out = false;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "diagram text or path to a file containing it")
        ->required();
    cmd->add_option("--format", format, "input format: pd, gauss or braid")
        ->check(CLI::IsMember({"pd", "gauss", "braid"}));
    cmd->add_option("--strands", strands, "strand count for braid input (0 = infer)");
  };

  auto* info = app.add_subcommand("info", "crossing count, components, classicality, writhe");
  add_input(info);
  info->add_flag("--json", json_out, "emit JSON");

  auto* certify = app.add_subcommand("certify", "emit a minimality certificate (JSON)");
  add_input(certify);
  certify->add_option("--category", category, "classical, framed or long")
      ->check(CLI::IsMember({"classical", "framed", "long"}));
  certify->add_option("--limit", limit, "state-sum crossing limit");

  auto* bracket = app.add_subcommand("bracket", "Kauffman bracket polynomial and span report");
  add_input(bracket);
  bracket->add_option("--limit", limit, "state-sum crossing limit");
  bracket->add_flag("--json", json_out, "emit JSON");

  auto* batch = app.add_subcommand("batch", "run the corpus and report verdicts");
  batch->add_option("--corpus", corpus, "corpus file of named PD codes")->required();
  batch->add_option("--limit", limit, "state-sum crossing limit");

  auto* cablecmd = app.add_subcommand("cable", "emit the blackboard-framed k-cable as PD text");
  add_input(cablecmd);
  cablecmd->add_option("--k", cable_k, "cable multiplicity")->required();

  auto* mirrorcmd = app.add_subcommand("mirror", "emit the mirror diagram as PD text");
  add_input(mirrorcmd);

  auto* consum = app.add_subcommand("consum", "emit a connected sum as PD text");
  consum->add_option("input1", input, "first diagram (PD text or file)")->required();
  consum->add_option("input2", input2, "second diagram (PD text or file)")->required();
  consum->add_option("--arc1", arc1, "dart id selecting the first splice arc");
  consum->add_option("--arc2", arc2, "dart id selecting the second splice arc");

  CLI11_PARSE(app, argc, argv);

  if (*info) {
    DiagramHolder d;
    kc_error err = parse_diagram(load_input(input), format, strands, &d.d);
    if (err != KC_OK) fail(err);
    if (json_out) {
      StringHolder s;
      if ((err = kc_info_json(d.d, &s.s)) != KC_OK) fail(err);
      std::cout << s.str() << "\n";
    } else {
      std::size_t n = 0, comps = 0;
      int knot = 0, classical = 0, writhe = 0;
      kc_crossing_count(d.d, &n);
      kc_component_count(d.d, &comps);
      kc_is_knot(d.d, &knot);
      kc_is_classical(d.d, &classical);
      kc_writhe(d.d, &writhe);
      std::cout << "crossings: " << n << "\ncomponents: " << comps
                << "\nknot: " << (knot ? "yes" : "no")
                << "\nclassical: " << (classical ? "yes" : "no") << "\nwrithe: " << writhe
                << "\n";
    }
    return kExitOk;
  }

  if (*certify) {
    std::string text = load_input(input);
    StringHolder cert;
    kc_error err;
    if (category == "long") {
      if (format != "pd") {
        std::cerr << "error: long diagrams are only supported in pd format\n";
        return kExitParse;
      }
      kc_long_diagram* ld = nullptr;
      if ((err = kc_parse_long_pd(text.c_str(), &ld)) != KC_OK) fail(err);
      err = kc_long_certificate_json(ld, limit, &cert.s);
      kc_long_diagram_free(ld);
      if (err != KC_OK) fail(err);
    } else {
      DiagramHolder d;
      if ((err = parse_diagram(text, format, strands, &d.d)) != KC_OK) fail(err);
      if ((err = kc_certificate_json(d.d, category.c_str(), limit, &cert.s)) != KC_OK)
        fail(err);
    }
    std::cout << cert.str() << "\n";
    auto verdict = nlohmann::json::parse(cert.str())["verdict"].get<std::string>();
    return verdict == "inconclusive" ? kExitInconclusive : kExitOk;
  }

  if (*bracket) {
    DiagramHolder d;
    kc_error err = parse_diagram(load_input(input), format, strands, &d.d);
    if (err != KC_OK) fail(err);
    StringHolder report;
    if ((err = kc_bracket_report_json(d.d, limit, &report.s)) != KC_OK) fail(err);
    if (json_out) {
      std::cout << report.str() << "\n";
    } else {
      auto j = nlohmann::json::parse(report.str());
      std::cout << "bracket: " << j["polynomial"].get<std::string>() << "\n"
                << "span: " << j["span"].get<int>() << "\n"
                << "bound: " << j["bound"].get<int>() << " (n=" << j["n"].get<std::size_t>()
                << ", chi=" << j["chi"].get<int>() << ")\n"
                << "equality: " << (j["equality"].get<bool>() ? "yes" : "no") << "\n";
    }
    return kExitOk;
  }

  if (*batch) return run_batch(corpus, limit);

  if (*cablecmd) {
    DiagramHolder d, out;
    kc_error err = parse_diagram(load_input(input), format, strands, &d.d);
    if (err != KC_OK) fail(err);
    if ((err = kc_cable(d.d, cable_k, &out.d)) != KC_OK) fail(err);
    StringHolder s;
    if ((err = kc_serialize_pd(out.d, &s.s)) != KC_OK) fail(err);
    std::cout << s.str() << "\n";
    return kExitOk;
  }

  if (*mirrorcmd) {
    DiagramHolder d, out;
    kc_error err = parse_diagram(load_input(input), format, strands, &d.d);
    if (err != KC_OK) fail(err);
    if ((err = kc_mirror(d.d, &out.d)) != KC_OK) fail(err);
    StringHolder s;
    if ((err = kc_serialize_pd(out.d, &s.s)) != KC_OK) fail(err);
    std::cout << s.str() << "\n";
    return kExitOk;
  }

  if (*consum) {
    DiagramHolder d1, d2, out;
    kc_error err = kc_parse_pd(load_input(input).c_str(), &d1.d);
    if (err != KC_OK) fail(err);
    if ((err = kc_parse_pd(load_input(input2).c_str(), &d2.d)) != KC_OK) fail(err);
    if ((err = kc_connected_sum(d1.d, arc1, d2.d, arc2, &out.d)) != KC_OK) fail(err);
    StringHolder s;
    if ((err = kc_serialize_pd(out.d, &s.s)) != KC_OK) fail(err);
    std::cout << s.str() << "\n";
    return kExitOk;
  }

  return kExitOk;
}
