// hypo: batch front door for the hypoenergetic-graph toolkit.
// Subcommands: energy, enumerate, verify-theorem, certify.
//
// Exit codes: 0 success/confirmed, 1 mathematical counterexample or
// certification failure, 2 usage or numeric error.

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hypo/canonical.hpp"
#include "hypo/catalog.hpp"
#include "hypo/certify.hpp"
#include "hypo/cuts.hpp"
#include "hypo/enumerate.hpp"
#include "hypo/graph.hpp"
#include "hypo/graph6.hpp"
#include "hypo/io.hpp"
#include "hypo/spectral.hpp"

#ifndef HYPO_VERSION
#define HYPO_VERSION "0.0.0"
#endif

namespace {

using json = nlohmann::ordered_json;

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in)
      throw std::runtime_error("cannot open input file '" + path + "'");
    buf << in.rdbuf();
  }
  return buf.str();
}

std::vector<hypo::Graph> load_graphs(const std::string& text,
                                     const std::string& format) {
  std::vector<hypo::Graph> out;
  if (format == "edgelist") {
    out.push_back(hypo::parse_edge_list_text(text));
    return out;
  }
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    try {
      out.push_back(hypo::from_graph6(line));
    } catch (const std::exception& e) {
      throw std::runtime_error("input line " + std::to_string(lineno) + ": " +
                               e.what());
    }
  }
  return out;
}

std::string fmt_real(double x) {
  std::ostringstream out;
  out << std::setprecision(12) << x;
  std::string s = out.str();
  if (s.find_first_of(".e") == std::string::npos &&
      s.find_first_of("in") == std::string::npos)  // inf/nan
    s += ".0";
  return s;
}

void write_text(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot open output file '" + out_path + "'");
  out << text;
}

// Deterministic parallel map: fn(i) is pure per index; the first exception
// wins and is rethrown after all workers stop.
template <typename Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

struct EnumFlags {
  int max_n = 0;
  int delta = 3;
  bool trees = false;
  bool cyclic_only = false;
  bool quadrangle_free = false;
  bool min_edges_n = false;

  hypo::EnumSpec to_spec() const {
    hypo::ClassFilter f = hypo::ClassFilter::AllConnected;
    if (trees) f = hypo::ClassFilter::TreesOnly;
    if (cyclic_only) f = hypo::ClassFilter::CyclicOnly;
    if (quadrangle_free) f = hypo::ClassFilter::QuadrangleFreeOnly;
    return hypo::EnumSpec{max_n, delta, f, min_edges_n};
  }

  std::string class_name() const {
    if (trees) return "trees";
    if (cyclic_only) return "cyclic";
    if (quadrangle_free) return "quadrangle-free";
    return "all";
  }
};

void add_enum_flags(CLI::App* cmd, EnumFlags& flags) {
  cmd->add_option("--max-n", flags.max_n, "largest vertex count to enumerate")
      ->required();
  cmd->add_option("--delta", flags.delta, "maximum degree bound")
      ->capture_default_str();
  auto* t = cmd->add_flag("--trees", flags.trees, "trees only (m = n-1)");
  auto* c = cmd->add_flag("--cyclic-only", flags.cyclic_only,
                          "cyclic graphs only (m >= n)");
  auto* q = cmd->add_flag("--quadrangle-free", flags.quadrangle_free,
                          "graphs without a 4-cycle subgraph");
  t->excludes(c)->excludes(q);
  c->excludes(q);
  cmd->add_flag("--min-edges-n", flags.min_edges_n,
                "additionally require m >= n");
}

json base_report(const std::string& command, json parameters) {
  json report;
  report["schema"] = "hypo.report.v1";
  report["tool_version"] = HYPO_VERSION;
  report["command"] = command;
  report["parameters"] = std::move(parameters);
  return report;
}

const char* tier_name(hypo::PrecisionTier tier) {
  switch (tier) {
    case hypo::PrecisionTier::Standard:
      return "standard";
    case hypo::PrecisionTier::Escalated:
      return "escalated";
    case hypo::PrecisionTier::Exact:
      return "exact";
  }
  return "unknown";
}

json spectrum_record(const hypo::ClassifiedGraph& rec) {
  const hypo::Graph& g = rec.graph;
  json record;
  record["id"] = rec.canonical;
  record["n"] = g.order();
  record["m"] = g.size();
  record["c"] = g.size() - g.order() + 1;
  record["energy"] = rec.verdict.energy;
  record["margin"] = rec.verdict.margin;
  record["verdict"] =
      rec.verdict.hypoenergetic ? "hypoenergetic" : "non-hypoenergetic";
  record["precision"] = tier_name(rec.verdict.tier);
  return record;
}

int cmd_energy(const std::string& input, const std::string& format) {
  auto graphs = load_graphs(read_input(input), format);
  if (graphs.size() != 1)
    throw std::runtime_error("energy expects exactly one graph, got " +
                             std::to_string(graphs.size()));
  const hypo::Graph& g = graphs.front();
  std::ostringstream head;
  head << "n=" << g.order() << " m=" << g.size();
  auto comps = hypo::connected_components(g);
  if (comps.size() == 1) {
    head << " c=" << g.size() - g.order() + 1;
  } else {
    head << " components=" << comps.size() << " c=";
    for (std::size_t i = 0; i < comps.size(); ++i) {
      hypo::Graph h = g.induced(comps[i]);
      head << (i ? "," : "") << h.size() - h.order() + 1;
    }
  }
  hypo::EnergyVerdict verdict = hypo::classify(g);
  std::cout << head.str() << '\n'
            << "E=" << fmt_real(verdict.energy)
            << " margin=" << fmt_real(verdict.margin) << " verdict="
            << (verdict.hypoenergetic ? "hypoenergetic" : "non-hypoenergetic")
            << " precision=" << tier_name(verdict.tier) << '\n';
  return 0;
}

int cmd_enumerate(const EnumFlags& flags, bool counts,
                  const std::string& format, int jobs,
                  const std::string& out_path) {
  const hypo::EnumSpec spec = flags.to_spec();
  if (counts) {
    auto all = hypo::classify_stream(spec, jobs);
    std::vector<long> total(static_cast<std::size_t>(spec.n_max) + 1, 0);
    std::vector<long> hypo_count(static_cast<std::size_t>(spec.n_max) + 1, 0);
    for (const auto& rec : all) {
      ++total[static_cast<std::size_t>(rec.graph.order())];
      if (rec.verdict.hypoenergetic)
        ++hypo_count[static_cast<std::size_t>(rec.graph.order())];
    }
    std::ostringstream csv;
    csv << "n,count,hypoenergetic_count\n";
    for (int n = 1; n <= spec.n_max; ++n)
      csv << n << ',' << total[static_cast<std::size_t>(n)] << ','
          << hypo_count[static_cast<std::size_t>(n)] << '\n';
    write_text(out_path, csv.str());
    return 0;
  }
  std::ostringstream body;
  bool first = true;
  hypo::for_each_connected_graph(
      spec, [&](const hypo::Graph& g, const std::string&) {
        if (format == "edgelist") {
          if (!first) body << '\n';
          body << hypo::format_edge_list(g);
        } else {
          body << hypo::to_graph6(g) << '\n';
        }
        first = false;
      });
  write_text(out_path, body.str());
  return 0;
}

int cmd_verify_theorem(const EnumFlags& flags, int jobs,
                       const std::string& out_path) {
  const hypo::EnumSpec spec = flags.to_spec();
  auto all = hypo::classify_stream(spec, jobs);

  // Which catalog members does the scanned universe contain?
  std::vector<std::pair<std::string, std::string>> expected;  // (canon, name)
  for (const hypo::CatalogEntry& entry : hypo::exceptional_catalog()) {
    const hypo::Graph& g = *entry.graph;
    if (g.order() > spec.n_max || g.order() < 1) continue;
    if (g.max_degree() > spec.delta_max) continue;
    if (spec.min_edges_n && g.size() < g.order()) continue;
    bool in_class = true;
    switch (spec.filter) {
      case hypo::ClassFilter::AllConnected: break;
      case hypo::ClassFilter::TreesOnly:
        in_class = g.size() == g.order() - 1;
        break;
      case hypo::ClassFilter::CyclicOnly:
        in_class = g.size() >= g.order();
        break;
      case hypo::ClassFilter::QuadrangleFreeOnly:
        in_class = !hypo::has_quadrangle(g);
        break;
    }
    if (in_class)
      expected.emplace_back(hypo::canonical_form(g),
                            std::string(hypo::to_string(entry.name)));
  }

  json records = json::array();
  std::multiset<std::string> hit_forms;
  std::vector<std::string> hit_graph6;
  long per_n_limit = spec.n_max;
  std::vector<long> total(static_cast<std::size_t>(per_n_limit) + 1, 0);
  std::vector<long> hits_at(static_cast<std::size_t>(per_n_limit) + 1, 0);
  for (const auto& rec : all) {
    records.push_back(spectrum_record(rec));
    ++total[static_cast<std::size_t>(rec.graph.order())];
    if (rec.verdict.hypoenergetic) {
      hit_forms.insert(rec.canonical);
      hit_graph6.push_back(rec.canonical);
      ++hits_at[static_cast<std::size_t>(rec.graph.order())];
    }
  }

  std::multiset<std::string> expected_forms;
  for (const auto& [form, name] : expected) expected_forms.insert(form);
  const bool confirmed = hit_forms == expected_forms;

  json unexpected = json::array();
  for (const std::string& form : hit_forms)
    if (!expected_forms.count(form)) unexpected.push_back(form);
  json missing = json::array();
  for (const auto& [form, name] : expected)
    if (!hit_forms.count(form)) missing.push_back(name);

  json report = base_report("verify-theorem",
                            {{"max_n", spec.n_max},
                             {"delta", spec.delta_max},
                             {"class", flags.class_name()},
                             {"min_edges_n", spec.min_edges_n}});
  report["records"] = std::move(records);
  json per_n = json::array();
  for (int n = 1; n <= spec.n_max; ++n)
    per_n.push_back({{"n", n},
                     {"count", total[static_cast<std::size_t>(n)]},
                     {"hypoenergetic", hits_at[static_cast<std::size_t>(n)]}});
  json expected_names = json::array();
  for (const auto& [form, name] : expected) expected_names.push_back(name);
  report["summary"] = {{"total", all.size()},
                       {"hypoenergetic", hit_forms.size()},
                       {"per_n", std::move(per_n)},
                       {"expected_hits", std::move(expected_names)},
                       {"confirmed", confirmed},
                       {"unexpected", std::move(unexpected)},
                       {"missing", std::move(missing)}};
  write_text(out_path, report.dump(2) + "\n");

  if (!confirmed) {
    std::cerr << "hypo: hypoenergetic hit set differs from the expected "
                 "catalog members\n";
    for (const std::string& form : hit_forms)
      if (!expected_forms.count(form))
        std::cerr << "hypo:   unexpected hit (canonical graph6): " << form
                  << '\n';
    for (const auto& [form, name] : expected)
      if (!hit_forms.count(form))
        std::cerr << "hypo:   missing expected hit: " << name << '\n';
    return 1;
  }
  return 0;
}

struct CertifyOutcome {
  std::string canonical;
  std::string status;  // certified | exceptional | stuck | rejected
  std::string detail;  // catalog name, stuck graph6, or failure message
  std::string certificate;
  hypo::VerifyReport verify;
  json cases = json::array();
  int cut_count = 0;
  int leaf_count = 0;
  int max_cut_size = 0;
};

void collect_cut_stats(const hypo::CertNode& node, CertifyOutcome& out) {
  if (node.is_leaf()) {
    ++out.leaf_count;
    return;
  }
  ++out.cut_count;
  const int size = static_cast<int>(node.cut->edges.size());
  out.max_cut_size = std::max(out.max_cut_size, size);
  if (node.cut_report) {
    const hypo::CutReport& r = *node.cut_report;
    out.cases.push_back({{"strategy", std::string(hypo::to_string(r.strategy))},
                         {"kappa_core", r.kappa_core},
                         {"label", std::string(hypo::to_string(r.label))},
                         {"size", r.cut_size}});
  }
  collect_cut_stats(*node.left, out);
  collect_cut_stats(*node.right, out);
}

int cmd_certify(const std::string& input, const std::string& format, int jobs,
                const std::string& out_path) {
  auto graphs = load_graphs(read_input(input), format);
  if (graphs.empty()) throw std::runtime_error("no input graphs");
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (!hypo::is_connected(graphs[i]))
      throw std::runtime_error("input graph " + std::to_string(i) +
                               " is disconnected");
    if (graphs[i].max_degree() > 3)
      throw std::runtime_error("input graph " + std::to_string(i) +
                               " has maximum degree > 3");
  }

  std::vector<CertifyOutcome> outcomes(graphs.size());
  parallel_for(graphs.size(), jobs, [&](std::size_t i) {
    const hypo::Graph& g = graphs[i];
    CertifyOutcome& out = outcomes[i];
    out.canonical = hypo::canonical_form(g);
    if (auto name = hypo::is_exceptional(g)) {
      out.status = "exceptional";
      out.detail = std::string(hypo::to_string(*name));
      return;
    }
    try {
      hypo::Certificate cert = hypo::certify(g);
      out.certificate = hypo::serialize_certificate(cert);
      collect_cut_stats(*cert.root, out);
      out.verify = hypo::verify_certificate(cert);
      out.status = out.verify.accepted ? "certified" : "rejected";
      out.detail = out.verify.failure;
    } catch (const hypo::CertifyError& e) {
      out.status = "stuck";
      out.detail = e.stuck_graph6;
    }
  });

  if (!out_path.empty()) {
    std::vector<std::pair<std::size_t, const CertifyOutcome*>> with_cert;
    for (std::size_t i = 0; i < outcomes.size(); ++i)
      if (!outcomes[i].certificate.empty()) with_cert.emplace_back(i, &outcomes[i]);
    if (graphs.size() == 1) {
      if (!with_cert.empty()) write_text(out_path, with_cert[0].second->certificate);
    } else {
      std::filesystem::create_directories(out_path);
      for (auto [i, out] : with_cert) {
        std::ostringstream name;
        name << "cert_" << std::setw(4) << std::setfill('0') << i << ".txt";
        write_text((std::filesystem::path(out_path) / name.str()).string(),
                   out->certificate);
      }
    }
  }

  std::vector<std::size_t> order(graphs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (graphs[a].order() != graphs[b].order())
      return graphs[a].order() < graphs[b].order();
    if (outcomes[a].canonical != outcomes[b].canonical)
      return outcomes[a].canonical < outcomes[b].canonical;
    return a < b;
  });

  json records = json::array();
  long certified = 0, exceptional = 0, failed = 0;
  for (std::size_t i : order) {
    const hypo::Graph& g = graphs[i];
    const CertifyOutcome& out = outcomes[i];
    json record;
    record["input_index"] = i;
    record["id"] = out.canonical;
    record["n"] = g.order();
    record["m"] = g.size();
    record["c"] = g.size() - g.order() + 1;
    record["status"] = out.status;
    if (out.status == "exceptional") {
      record["exceptional"] = out.detail;
      ++exceptional;
    } else if (out.status == "stuck") {
      record["stuck_graph6"] = out.detail;
      ++failed;
    } else {
      record["cut_count"] = out.cut_count;
      record["leaf_count"] = out.leaf_count;
      record["max_cut_size"] = out.max_cut_size;
      record["cases"] = out.cases;
      json nodes = json::array();
      for (const hypo::NodeCheck& chk : out.verify.nodes)
        nodes.push_back({{"index", chk.index},
                         {"kind", chk.leaf ? "leaf" : "cut"},
                         {"n", chk.n},
                         {"m", chk.m},
                         {"slack", chk.slack}});
      record["verification"] = {{"accepted", out.verify.accepted},
                                {"failure", out.verify.failure},
                                {"root_energy", out.verify.root_energy},
                                {"root_slack", out.verify.root_slack},
                                {"nodes", std::move(nodes)}};
      record["certificate"] = out.certificate;
      if (out.status == "certified")
        ++certified;
      else
        ++failed;
    }
    records.push_back(std::move(record));
  }

  json report = base_report("certify", {{"input", input}, {"format", format}});
  report["records"] = std::move(records);
  report["summary"] = {{"total", graphs.size()},
                       {"certified", certified},
                       {"exceptional", exceptional},
                       {"failed", failed}};
  std::cout << report.dump(2) << '\n';

  if (failed > 0) {
    for (const CertifyOutcome& out : outcomes) {
      if (out.status == "stuck")
        std::cerr << "hypo: no good cut found, stuck subgraph (graph6): "
                  << out.detail << '\n';
      else if (out.status == "rejected")
        std::cerr << "hypo: certificate rejected: " << out.detail << '\n';
    }
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toolkit for hypoenergetic graphs with maximum degree <= 3"};
  app.set_version_flag("--version", std::string("hypo ") + HYPO_VERSION);
  app.require_subcommand(1);

  std::function<int()> action;

  auto* energy_cmd = app.add_subcommand(
      "energy", "energy, margin and verdict for a single graph");
  std::string energy_input;
  std::string energy_format = "graph6";
  energy_cmd->add_option("input", energy_input, "graph file, or - for stdin")
      ->required();
  energy_cmd->add_option("--format", energy_format, "input format")
      ->check(CLI::IsMember({"graph6", "edgelist"}))
      ->capture_default_str();
  energy_cmd->callback([&] {
    action = [&] { return cmd_energy(energy_input, energy_format); };
  });

  auto* enum_cmd = app.add_subcommand(
      "enumerate",
      "stream all connected graphs matching the degree/class constraints");
  EnumFlags enum_flags;
  bool enum_counts = false;
  std::string enum_format = "graph6";
  int enum_jobs = 1;
  std::string enum_out;
  add_enum_flags(enum_cmd, enum_flags);
  enum_cmd->add_flag("--counts", enum_counts,
                     "emit a per-order CSV census instead of graphs");
  enum_cmd->add_option("--format", enum_format, "output format")
      ->check(CLI::IsMember({"graph6", "edgelist"}))
      ->capture_default_str();
  enum_cmd->add_option("--jobs", enum_jobs, "worker threads for --counts")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
  enum_cmd->add_option("--out", enum_out, "output file (default stdout)");
  enum_cmd->callback([&] {
    action = [&] {
      return cmd_enumerate(enum_flags, enum_counts, enum_format, enum_jobs,
                           enum_out);
    };
  });

  auto* verify_cmd = app.add_subcommand(
      "verify-theorem",
      "scan the enumeration and compare hypoenergetic hits with the "
      "exceptional catalog");
  EnumFlags verify_flags;
  int verify_jobs = 1;
  std::string verify_out;
  add_enum_flags(verify_cmd, verify_flags);
  verify_cmd->add_option("--jobs", verify_jobs, "worker threads")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
  verify_cmd->add_option("--out", verify_out,
                         "report file (default stdout)");
  verify_cmd->callback([&] {
    action = [&] {
      return cmd_verify_theorem(verify_flags, verify_jobs, verify_out);
    };
  });

  auto* certify_cmd = app.add_subcommand(
      "certify",
      "build and verify decomposition certificates for the input graphs");
  std::string certify_input;
  std::string certify_format = "graph6";
  int certify_jobs = 1;
  std::string certify_out;
  certify_cmd
      ->add_option("input", certify_input, "graph file, or - for stdin")
      ->required();
  certify_cmd->add_option("--format", certify_format, "input format")
      ->check(CLI::IsMember({"graph6", "edgelist"}))
      ->capture_default_str();
  certify_cmd->add_option("--jobs", certify_jobs, "worker threads")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
  certify_cmd->add_option(
      "--out", certify_out,
      "certificate file (single input) or directory (corpus)");
  certify_cmd->callback([&] {
    action = [&] {
      return cmd_certify(certify_input, certify_format, certify_jobs,
                         certify_out);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  int code = 0;
  try {
    code = action();
  } catch (const std::exception& e) {
    std::cerr << "hypo: " << e.what() << '\n';
    code = 2;
  }
  const auto elapsed = std::chrono::duration<double, std::milli>(
      std::chrono::steady_clock::now() - start);
  // Wall time goes to stderr so reports stay byte-identical across runs.
  std::cerr << "hypo: wall time " << std::fixed << std::setprecision(1)
            << elapsed.count() << " ms\n";
  return code;
}
