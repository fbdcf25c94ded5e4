#include "nilchain/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "nilchain/chain.hpp"
#include "nilchain/errors.hpp"
#include "nilchain/format.hpp"
#include "nilchain/pairing.hpp"
#include "nilchain/root_system.hpp"
#include "nilchain/sum_engine.hpp"

namespace nilchain {

namespace {

struct Config {
  std::string family;
  int rank = 0;
  std::string format = "human";
  bool allow_large = false;
  bool abelian_only = false;
  bool radical_only = false;
  std::string complex;
  std::string chain;
  std::uint64_t max_chains = 100'000'000;
  int threads = 0;
};

void add_system_options(CLI::App* cmd, Config& cfg, bool csv_allowed) {
  cmd->add_option("--type", cfg.family, "Root system family (A-G)")->required();
  cmd->add_option("--rank", cfg.rank, "Rank")->required();
  std::vector<std::string> formats = {"human", "json"};
  if (csv_allowed) formats.emplace_back("csv");
  cmd->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();
  cmd->add_flag("--allow-large", cfg.allow_large, "Permit E7, E8 and systems with more than 64 positive roots");
}

void add_limit_option(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--max-chains", cfg.max_chains, "Abort when a complex has more chains than this")
      ->envname("NILCHAIN_MAX_CHAINS")
      ->capture_default_str();
}

RootSystem build_system(const Config& cfg) {
  return RootSystem(RootSystemSpec::parse(cfg.family, cfg.rank), {cfg.allow_large});
}

bool radical_vertex(const Ideal& n) { return !n.empty() && is_radical_member(n); }

int cmd_roots(const Config& cfg, std::ostream& out) {
  const RootSystem rs = build_system(cfg);
  if (cfg.format == "json") {
    nlohmann::json roots = nlohmann::json::array();
    for (std::size_t a = 0; a < rs.size(); ++a) {
      const auto& r = rs.roots()[a];
      roots.push_back({{"index", a}, {"coeffs", r.coeffs}, {"height", r.height}});
    }
    nlohmann::json doc = {{"type", std::string(1, rs.spec()->letter())},
                          {"rank", cfg.rank},
                          {"roots", roots}};
    out << doc.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << "index,coeffs,height\n";
    for (std::size_t a = 0; a < rs.size(); ++a) {
      const auto& r = rs.roots()[a];
      std::string coeffs;
      for (std::size_t k = 0; k < r.coeffs.size(); ++k) {
        coeffs += (k ? " " : "") + std::to_string(r.coeffs[k]);
      }
      out << a << ',' << coeffs << ',' << r.height << '\n';
    }
  } else {
    out << "# " << rs.name() << ": " << rs.size() << " positive roots\n";
    out << std::left << std::setw(7) << "index" << std::setw(20) << "coeffs" << "height\n";
    for (std::size_t a = 0; a < rs.size(); ++a) {
      const auto& r = rs.roots()[a];
      out << std::left << std::setw(7) << a << std::setw(20) << format_coeffs(r) << r.height << '\n';
    }
  }
  return kExitOk;
}

int cmd_ideals(const Config& cfg, std::ostream& out) {
  const RootSystem rs = build_system(cfg);
  const auto ideals = enumerate_ideals(rs);

  struct Row {
    std::size_t index;
    const Ideal* ideal;
    bool abelian;
    bool radical;
    ParabolicType normalizer;
  };
  std::vector<Row> rows;
  for (std::size_t k = 0; k < ideals.size(); ++k) {
    Row row{k, &ideals[k], is_abelian(ideals[k]), radical_vertex(ideals[k]),
            normalizer_type(ideals[k])};
    if (cfg.abelian_only && !row.abelian) continue;
    if (cfg.radical_only && !row.radical) continue;
    rows.push_back(row);
  }

  if (cfg.format == "json") {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& r : rows) {
      std::vector<std::vector<int>> expanded;
      for (auto a : r.ideal->indices()) expanded.push_back(rs.root(a).coeffs);
      list.push_back({{"index", r.index},
                      {"roots", ideal_to_json(*r.ideal)},
                      {"coeffs", expanded},
                      {"abelian", r.abelian},
                      {"radical", r.radical},
                      {"normalizer", r.normalizer.labels()}});
    }
    out << nlohmann::json{{"type", std::string(1, rs.spec()->letter())},
                          {"rank", cfg.rank},
                          {"ideals", list}}
               .dump(2)
        << '\n';
  } else if (cfg.format == "csv") {
    out << "index,roots,abelian,radical,normalizer\n";
    for (const auto& r : rows) {
      out << r.index << ",\"" << format_ideal(*r.ideal) << "\"," << (r.abelian ? 1 : 0) << ','
          << (r.radical ? 1 : 0) << ",\"" << format_parabolic(r.normalizer) << "\"\n";
    }
  } else {
    out << "# " << rs.name() << ": " << rows.size() << " of " << ideals.size() << " ideals\n";
    out << std::left << std::setw(7) << "index" << std::setw(28) << "roots" << std::setw(9)
        << "abelian" << std::setw(9) << "radical" << std::setw(12) << "normalizer"
        << "coeffs\n";
    for (const auto& r : rows) {
      out << std::left << std::setw(7) << r.index << std::setw(28) << format_ideal(*r.ideal)
          << std::setw(9) << (r.abelian ? "yes" : "no") << std::setw(9)
          << (r.radical ? "yes" : "no") << std::setw(12) << format_parabolic(r.normalizer)
          << format_ideal_expanded(*r.ideal) << '\n';
    }
  }
  return kExitOk;
}

int cmd_chains(const Config& cfg, std::ostream& out, std::ostream& err) {
  const auto kind = parse_complex_kind(cfg.complex);
  if (!kind) {
    err << "error: unknown complex '" << cfg.complex << "' (expected ci, ca, cr or cp)\n";
    return kExitUsage;
  }
  const RootSystem rs = build_system(cfg);
  const ChainSpace space = make_chain_space(rs, *kind);
  const std::uint64_t count = count_chains(space);
  if (count > cfg.max_chains) {
    err << "error: " << to_string(*kind) << " for " << rs.name() << " has " << count
        << " chains, above --max-chains " << cfg.max_chains << '\n';
    return kExitUsage;
  }

  const bool json = cfg.format == "json";
  bool first = true;
  if (json) out << "[\n";
  walk_chains(space, [&](std::span<const std::uint32_t> path, std::uint32_t mask) {
    const ParabolicType stab(mask);
    if (json) {
      nlohmann::json members = *kind == ComplexKind::CP
                                   ? parabolic_chain_to_json(parabolic_chain_from_path(space, path))
                                   : chain_to_json(chain_from_path(space, path));
      out << (first ? "  " : ",\n  ")
          << nlohmann::json{{"members", members}, {"length", path.size()}, {"stabilizer", stab.labels()}}
                 .dump();
    } else {
      const std::string text = *kind == ComplexKind::CP
                                   ? format_parabolic_chain(parabolic_chain_from_path(space, path))
                                   : format_chain(chain_from_path(space, path));
      out << text << "  length=" << path.size() << "  stabilizer=" << format_parabolic(stab) << '\n';
    }
    first = false;
  });
  if (json) {
    out << "\n]\n";
  } else {
    out << "# " << count << " chains in " << to_string(*kind) << " for " << rs.name() << '\n';
  }
  return kExitOk;
}

int cmd_pair(const Config& cfg, std::ostream& out, std::ostream& err) {
  Pairing pairing;
  if (cfg.complex == "ci-minus-ca") {
    pairing = Pairing::NonAbelian;
  } else if (cfg.complex == "ci-minus-cr") {
    pairing = Pairing::NonRadical;
  } else {
    err << "error: unknown pairing domain '" << cfg.complex
        << "' (expected ci-minus-ca or ci-minus-cr)\n";
    return kExitUsage;
  }
  const RootSystem rs = build_system(cfg);
  const Chain input = parse_chain_literal(rs, cfg.chain);
  if (!in_pairing_domain(pairing, input)) {
    err << "error: precondition violated: chain is not in "
        << (pairing == Pairing::NonAbelian ? "CI \\ CA (every member is abelian)"
                                           : "CI \\ CR (every member is a parabolic nilradical)")
        << '\n';
    return kExitUsage;
  }
  const Chain image = apply_pairing(pairing, input);
  const Chain back = in_pairing_domain(pairing, image) ? apply_pairing(pairing, image) : image;

  std::vector<std::pair<std::string, bool>> laws = {
      {"involution", back == input},
      {"length_changes_by_one",
       image.length() + 1 == input.length() || input.length() + 1 == image.length()},
      {"stabilizer_preserved", chain_stabilizer_type(image) == chain_stabilizer_type(input)},
      {"domain_closure", in_pairing_domain(pairing, image)},
  };
  if (pairing == Pairing::NonAbelian) {
    laws.emplace_back("top_preserved", !image.empty() && image.top() == input.top());
  }
  const bool ok = std::all_of(laws.begin(), laws.end(), [](const auto& l) { return l.second; });

  if (cfg.format == "json") {
    nlohmann::json law_json = nlohmann::json::object();
    for (const auto& [name, value] : laws) law_json[name] = value;
    out << nlohmann::json{{"domain", std::string(to_string(pairing))},
                          {"input", chain_to_json(input)},
                          {"output", chain_to_json(image)},
                          {"stabilizer", chain_stabilizer_type(input).labels()},
                          {"laws", law_json}}
               .dump(2)
        << '\n';
  } else {
    out << "domain:     " << to_string(pairing) << '\n';
    out << "input:      " << format_chain(input) << "  length=" << input.length() << '\n';
    out << "output:     " << format_chain(image) << "  length=" << image.length() << '\n';
    out << "stabilizer: " << format_parabolic(chain_stabilizer_type(input)) << '\n';
    for (const auto& [name, value] : laws) {
      out << "  " << std::left << std::setw(24) << name << (value ? "ok" : "FAILED") << '\n';
    }
  }
  return ok ? kExitOk : kExitFailed;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  const RootSystem rs = build_system(cfg);
  const VerificationReport report = verify(rs, {cfg.threads, cfg.max_chains});

  if (cfg.format == "json") {
    out << report_to_json(report).dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << "complex,length,count\n";
    for (const auto& c : report.complexes) {
      for (std::size_t k = 0; k < c.counts.by_length.size(); ++k) {
        out << to_string(c.kind) << ',' << k << ',' << c.counts.by_length[k] << '\n';
      }
    }
  } else {
    out << "verify " << rs.name() << '\n';
    out << std::left << std::setw(9) << "complex" << std::setw(10) << "chains" << "alternating sum\n";
    for (const auto& c : report.complexes) {
      out << std::left << std::setw(9) << to_string(c.kind) << std::setw(10) << c.counts.total
          << format_sum(c.sum) << '\n';
    }
    out << std::left << std::setw(19) << "closed form" << format_sum(report.closed_form) << '\n';
    for (const auto& c : report.complexes) {
      out << "by length " << to_string(c.kind) << ":";
      for (auto n : c.counts.by_length) out << ' ' << n;
      out << '\n';
    }
    for (const auto& r : report.involutions) {
      out << "pairing " << to_string(r.pairing) << ": " << r.domain_size << " chains, "
          << r.orbit_count << " orbits, " << r.failures() << " failures\n";
    }
    out << "cr<->cp: " << report.bijection.cr_chains << " / " << report.bijection.cp_chains
        << " chains, " << report.bijection.failures << " failures\n";
    out << "verdicts:\n";
    for (const auto& [name, ok] : report.verdicts) {
      out << "  " << std::left << std::setw(24) << name << (ok ? "PASS" : "FAIL") << '\n';
    }
    out << "note: sums are over chains at one fixed Borel subalgebra; CI/CA sums over G-classes are not computed\n";
    out << "elapsed_ms: " << std::fixed << std::setprecision(2) << report.elapsed_ms << '\n';
  }
  return report.all_passed() ? kExitOk : kExitFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Chains of ad-nilpotent ideals and their alternating sums", "nilchain"};
  app.require_subcommand(1);

  auto* roots = app.add_subcommand("roots", "Print the canonical positive-root table");
  add_system_options(roots, cfg, true);

  auto* ideals = app.add_subcommand("ideals", "List ideals of the Borel subalgebra");
  add_system_options(ideals, cfg, true);
  ideals->add_flag("--abelian", cfg.abelian_only, "Only abelian ideals");
  ideals->add_flag("--radical", cfg.radical_only, "Only nonzero parabolic nilradicals");

  auto* chains = app.add_subcommand("chains", "Stream the chains of one complex");
  add_system_options(chains, cfg, false);
  chains->add_option("--complex", cfg.complex, "ci, ca, cr or cp")->required();
  add_limit_option(chains, cfg);

  auto* pair = app.add_subcommand("pair", "Apply a pairing involution to one chain");
  add_system_options(pair, cfg, false);
  pair->add_option("--complex", cfg.complex, "ci-minus-ca or ci-minus-cr")->required();
  pair->add_option("--chain", cfg.chain, "Chain literal, e.g. \"[{2} < {0,1,2}]\"")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Check all alternating-sum identities");
  add_system_options(verify_cmd, cfg, true);
  add_limit_option(verify_cmd, cfg);
  verify_cmd->add_option("--threads", cfg.threads, "OpenMP threads (0 = default)")
      ->check(CLI::NonNegativeNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (roots->parsed()) return cmd_roots(cfg, out);
    if (ideals->parsed()) return cmd_ideals(cfg, out);
    if (chains->parsed()) return cmd_chains(cfg, out, err);
    if (pair->parsed()) return cmd_pair(cfg, out, err);
    if (verify_cmd->parsed()) return cmd_verify(cfg, out);
  } catch (const SpecError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ChainLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}

}  // namespace nilchain
