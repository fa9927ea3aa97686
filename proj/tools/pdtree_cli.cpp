// Command line front end: every subcommand prints stable key=value lines.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pdtree/pdtree.hpp"

namespace {

using namespace pdtree;

constexpr int kUsageError = 1;
constexpr int kDomainError = 2;

// File-level problems count as usage errors; pdtree::Error means the input
// was well formed but outside the mathematical domain.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

RootedTree load_tree(const std::string& path) {
  if (path != "-" && !std::filesystem::exists(path)) throw UsageError("no such file: " + path);
  return read_tree_file(path);
}

std::string join(const std::vector<Rank>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(xs[i]);
  }
  return out;
}

OffspringDistribution resolve_model(const std::string& model, const std::string& pmf_path) {
  if (model == "custom") {
    if (pmf_path.empty()) throw UsageError("--model custom requires --pmf FILE");
    if (!std::filesystem::exists(pmf_path)) throw UsageError("no such file: " + pmf_path);
    return OffspringDistribution::from_pmf_file(pmf_path);
  }
  return OffspringDistribution::builtin(model);
}

SamplerRoute resolve_route(const std::string& sampler) {
  return sampler == "pruefer" ? SamplerRoute::Pruefer : SamplerRoute::ConditionedGw;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

int cmd_solve(const std::string& path) {
  const auto input = load_tree(path);
  // Work on BFS ranks, report in the file's ranks.
  const auto canon = bfs_canonicalize(input);
  const auto res = gamma_pr_linear(canon.tree);
  const auto n = input.size();
  std::vector<Rank> members;
  std::vector<std::string> pairs;
  for (std::size_t v = 1; v <= n; ++v) {
    const Rank cv = canon.new_rank[v];
    if (res.in_pd_set[cv]) members.push_back(static_cast<Rank>(v));
  }
  std::vector<Rank> back(n + 1, kDummy);
  for (std::size_t v = 1; v <= n; ++v) back[canon.new_rank[v]] = static_cast<Rank>(v);
  std::vector<std::pair<Rank, Rank>> pr;
  for (auto [a, b] : res.pairs()) {
    Rank x = back[a], y = back[b];
    if (x > y) std::swap(x, y);
    pr.emplace_back(x, y);
  }
  std::sort(pr.begin(), pr.end());
  std::cout << "n=" << n << '\n'
            << "gamma_pr=" << res.gamma_pr << '\n'
            << "phi=" << res.phi << '\n'
            << "root_label=" << to_char(res.root_label()) << '\n'
            << "members=" << join(members) << '\n'
            << "pairs=";
  for (std::size_t i = 0; i < pr.size(); ++i)
    std::cout << (i ? " " : "") << pr[i].first << ':' << pr[i].second;
  std::cout << '\n';
  return 0;
}

int cmd_label(const std::string& path) {
  const auto tree = load_tree(path);
  const auto labels = label_recursive(tree);
  const auto arith = gamma_from_labels(labels);
  std::cout << "n=" << tree.size() << '\n' << "labels=";
  for (std::size_t v = 1; v <= tree.size(); ++v) std::cout << (v > 1 ? " " : "") << to_char(labels[v]);
  std::cout << '\n'
            << "phi=" << arith.phi << '\n'
            << "gamma_pr=" << arith.gamma_pr << '\n'
            << "vacuous=" << (arith.vacuous ? "true" : "false") << '\n';
  return 0;
}

int cmd_oracle(const std::string& path) {
  const auto tree = load_tree(path);
  std::cout << "n=" << tree.size() << '\n' << "gamma_pr=" << gamma_pr_bruteforce(tree) << '\n';
  return 0;
}

void print_constants(const std::string& model, const LimitConstants& c) {
  std::cout << "model=" << model << '\n'
            << "x_B=" << format_double(c.x_b, 10) << '\n'
            << "x_F=" << format_double(c.x_f, 10) << '\n'
            << "x_R=" << format_double(c.x_r, 10) << '\n'
            << "x_P=" << format_double(c.x_p, 10) << '\n'
            << "mu_pr=" << format_double(c.mu_pr, 10) << '\n'
            << "residual=" << format_double(c.residual, 3) << '\n'
            << "iterations=" << c.iterations << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Paired domination in trees: exact solver, oracle, samplers and simulations"};
  app.require_subcommand(1);

  std::string tree_path;
  auto* solve = app.add_subcommand("solve", "Minimum paired dominating set of a tree file");
  solve->add_option("file", tree_path, "tree file ('-' for stdin)")->required();
  auto* label = app.add_subcommand("label", "B/F/R/P label of every vertex");
  label->add_option("file", tree_path, "tree file ('-' for stdin)")->required();
  auto* oracle = app.add_subcommand("oracle", "Paired domination number by exhaustive search (n <= 18)");
  oracle->add_option("file", tree_path, "tree file ('-' for stdin)")->required();

  std::string model = "labelled", pmf_path, sampler = "gw";
  std::size_t n = 0, reps = 0;
  std::uint64_t seed = 0, stream = 0;
  const std::vector<std::string> models{"binary", "plane", "labelled", "custom"};

  auto* sample = app.add_subcommand("sample", "Draw one random tree of order n");
  sample->add_option("--model", model)->check(CLI::IsMember(models))->required();
  sample->add_option("--n", n)->check(CLI::Range(std::size_t{1}, std::size_t{100'000'000}))->required();
  sample->add_option("--seed", seed)->required();
  sample->add_option("--stream", stream, "stream id within the seed");
  sample->add_option("--pmf", pmf_path, "offspring pmf file (lines 'k p_k')");
  sample->add_option("--sampler", sampler)->check(CLI::IsMember({"gw", "pruefer"}));

  double tol = 1e-12;
  std::size_t max_iter = 1'000'000;
  std::string csv_path, summary_path, out_dir = ".";
  auto* constants = app.add_subcommand("constants", "Solve the root-label fixed point");
  constants->add_option("--model", model)
      ->check(CLI::IsMember({"binary", "plane", "labelled", "custom", "all"}))
      ->required();
  constants->add_option("--tol", tol)->check(CLI::PositiveNumber);
  constants->add_option("--max-iter", max_iter);
  constants->add_option("--pmf", pmf_path);
  constants->add_option("--csv", csv_path, "also write a CSV row per model");

  unsigned workers = 1;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo distribution of gamma_pr");
  simulate->add_option("--model", model)->check(CLI::IsMember(models))->required();
  simulate->add_option("--n", n)->check(CLI::Range(std::size_t{2}, std::size_t{100'000'000}))->required();
  simulate->add_option("--reps", reps)->check(CLI::Range(std::size_t{1}, std::size_t{1'000'000'000}))->required();
  simulate->add_option("--seed", seed)->required();
  simulate->add_option("--workers", workers)->check(CLI::Range(1u, 1024u));
  simulate->add_option("--pmf", pmf_path);
  simulate->add_option("--sampler", sampler)->check(CLI::IsMember({"gw", "pruefer"}));
  simulate->add_option("--csv", csv_path, "histogram CSV");
  simulate->add_option("--summary", summary_path, "key=value summary file");

  std::size_t d0 = 2;
  auto* fixtures = app.add_subcommand("fixtures", "Write the tau0, t1, t2, tau1, tau2 trees");
  fixtures->add_option("--d0", d0)->check(CLI::Range(std::size_t{2}, std::size_t{64}))->required();
  fixtures->add_option("--out-dir", out_dir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*solve) return cmd_solve(tree_path);
    if (*label) return cmd_label(tree_path);
    if (*oracle) return cmd_oracle(tree_path);

    if (*sample) {
      const auto dist = resolve_model(model, pmf_path);
      const auto tree = sample_tree(dist, n, seed, stream, resolve_route(sampler));
      std::cout << serialize(tree) << '\n';
      return 0;
    }

    if (*constants) {
      std::vector<std::string> names;
      if (model == "all") names = {"binary", "plane", "labelled"};
      else names = {model};
      std::string csv = "model,x_B,x_F,x_R,x_P,mu_pr,residual,iterations\n";
      for (std::size_t i = 0; i < names.size(); ++i) {
        const auto dist = resolve_model(names[i], pmf_path);
        const auto c = solve_system(dist, tol, max_iter);
        if (i) std::cout << '\n';
        print_constants(names[i], c);
        csv += names[i] + ',' + format_double(c.x_b, 10) + ',' + format_double(c.x_f, 10) + ',' +
               format_double(c.x_r, 10) + ',' + format_double(c.x_p, 10) + ',' +
               format_double(c.mu_pr, 10) + ',' + format_double(c.residual, 3) + ',' +
               std::to_string(c.iterations) + '\n';
      }
      if (!csv_path.empty()) write_text(csv_path, csv);
      return 0;
    }

    if (*simulate) {
      SimConfig cfg{resolve_model(model, pmf_path), n, reps, seed, workers, resolve_route(sampler)};
      const auto s = run_simulation(cfg);
      const auto kv = summary_key_values(s);
      std::cout << kv;
      if (s.reps >= kMinDiagnosticReps) {
        const auto r = normality_diagnostics(s);
        std::cout << "degenerate=" << (r.degenerate ? "true" : "false") << '\n';
        if (r.deciles) {
          std::cout << "decile_chi2=" << format_double(r.deciles->statistic, 6) << '\n'
                    << "decile_df=" << r.deciles->df << '\n'
                    << "decile_p=" << format_double(r.deciles->p_value, 6) << '\n';
        }
      }
      if (!csv_path.empty()) write_text(csv_path, histogram_csv(s));
      if (!summary_path.empty()) write_text(summary_path, kv);
      return 0;
    }

    if (*fixtures) {
      const auto f = build_fixtures(d0);
      std::filesystem::create_directories(out_dir);
      const std::pair<const char*, const RootedTree*> all[] = {
          {"tau0", &f.tau0}, {"t1", &f.t1}, {"t2", &f.t2}, {"tau1", &f.tau1}, {"tau2", &f.tau2}};
      for (auto [name, tree] : all) {
        const auto path = (std::filesystem::path(out_dir) / (std::string(name) + ".tree")).string();
        write_tree_file(path, *tree);
        const auto res = gamma_pr_linear(*tree);
        std::cout << name << ".file=" << path << '\n'
                  << name << ".n=" << tree->size() << '\n'
                  << name << ".gamma_pr=" << res.gamma_pr << '\n'
                  << name << ".root_label=" << to_char(res.root_label()) << '\n';
      }
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const pdtree::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kUsageError;
}
