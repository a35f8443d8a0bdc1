#include "ptab/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ptab/bijections.hpp"
#include "ptab/enumeration.hpp"
#include "ptab/statistics.hpp"
#include "ptab/verify.hpp"

namespace ptab {

namespace {

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open '" + path + "'");
    buffer << file.rdbuf();
  }
  return buffer.str();
}

void write_polynomial(const Polynomial& poly, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << poly.to_json().dump(2) << '\n';
  } else if (format == "csv") {
    out << "p,q,r,y,coeff\n";
    for (const auto& [e, c] : poly.terms()) {
      out << e[0] << ',' << e[1] << ',' << e[2] << ',' << e[3] << ',' << c.get_str() << '\n';
    }
  } else {
    out << poly.to_string() << '\n';
  }
}

void write_series(const TruncatedSeries& s, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << s.to_json().dump(2) << '\n';
  } else if (format == "csv") {
    out << "n,p,q,r,y,coeff\n";
    for (int n = 0; n <= s.order(); ++n) {
      for (const auto& [e, c] : s[n].terms()) {
        out << n << ',' << e[0] << ',' << e[1] << ',' << e[2] << ',' << e[3] << ',' << c.get_str() << '\n';
      }
    }
  } else {
    for (int n = 0; n <= s.order(); ++n) out << "x^" << n << ": " << s[n].to_string() << '\n';
  }
}

std::vector<std::string> split_names(const std::string& list) {
  std::vector<std::string> names;
  std::stringstream stream(list);
  std::string name;
  while (std::getline(stream, name, ',')) {
    if (!name.empty()) names.push_back(name);
  }
  if (names.empty()) throw std::invalid_argument("empty statistic list");
  return names;
}

CLI::Option* add_format(CLI::App* cmd, std::string& target, std::vector<std::string> choices) {
  return cmd->add_option("--format", target, "Output format")
      ->check(CLI::IsMember(std::move(choices)))
      ->capture_default_str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Permutation tableaux, the maps phi and psi, their statistics and generating functions", "ptab"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string tableau_file, perm_text, pattern_text, shape_text, check_name, stat_list, source = "perm";
  int k = 0, n = 0, order = 8, jobs = 1, bound = 8;
  bool literal = false, trace = false, csv = false, json = false;

  auto* phi_cmd = app.add_subcommand("phi", "Map a tableau file (or - for stdin) to its permutation");
  phi_cmd->add_option("tableau-file", tableau_file, "Tableau in text or JSON form")->required();
  phi_cmd->add_flag("--trace", trace, "Emit the zig-zag route of every label as JSON");

  auto* phi_inv_cmd = app.add_subcommand("phi-inv", "Map a permutation to its tableau");
  phi_inv_cmd->add_option("perm", perm_text)->required();
  add_format(phi_inv_cmd, format, {"text", "json"});

  auto* psi_cmd = app.add_subcommand("psi", "Apply psi to a permutation");
  psi_cmd->add_option("perm", perm_text)->required();
  auto* psi_inv_cmd = app.add_subcommand("psi-inv", "Apply the inverse of psi to a permutation");
  psi_inv_cmd->add_option("perm", perm_text)->required();

  auto* stats_cmd = app.add_subcommand("stats", "Statistics of a permutation or a tableau as JSON");
  stats_cmd->require_subcommand(1);
  auto* stats_perm = stats_cmd->add_subcommand("perm", "Permutation statistics");
  stats_perm->add_option("perm", perm_text)->required();
  auto* stats_tab = stats_cmd->add_subcommand("tab", "Tableau statistics");
  stats_tab->add_option("tableau-file", tableau_file)->required();

  auto* count_cmd = app.add_subcommand("count-pattern", "Count occurrences of a dashed pattern such as 2-31");
  count_cmd->add_option("perm", perm_text)->required();
  count_cmd->add_option("pattern", pattern_text)->required();

  auto* poly_cmd = app.add_subcommand("poly", "Enumeration polynomials");
  poly_cmd->require_subcommand(1);
  const std::vector<std::string> poly_formats{"text", "json", "csv"};
  auto* poly_f = poly_cmd->add_subcommand("F", "Fillings of a shape by #0 (p) and #1 (q)");
  poly_f->add_option("shape", shape_text, "Parts such as 3,2,1")->required();
  auto* poly_d = poly_cmd->add_subcommand("D", "D_{k,n}(p,q,r)");
  poly_d->add_option("k", k)->required();
  poly_d->add_option("n", n)->required();
  poly_d->add_flag("--literal", literal, "Sum over every partition in the box");
  auto* poly_e = poly_cmd->add_subcommand("E", "E_{k,n}(q) from the closed formula");
  poly_e->add_option("k", k)->required();
  poly_e->add_option("n", n)->required();
  auto* poly_ehat = poly_cmd->add_subcommand("Ehat", "q^{k-n} E_{k,n}(q)");
  poly_ehat->add_option("k", k)->required();
  poly_ehat->add_option("n", n)->required();
  auto* poly_b = poly_cmd->add_subcommand("B", "Carlitz q-Eulerian polynomial B_{n,k}(q)");
  poly_b->add_option("n", n)->required();
  poly_b->add_option("k", k)->required();
  for (auto* sub : {poly_f, poly_d, poly_e, poly_ehat, poly_b}) add_format(sub, format, poly_formats);

  auto* series_cmd = app.add_subcommand("series", "Generating functions as coefficient tables");
  series_cmd->require_subcommand(1);
  auto* series_dk = series_cmd->add_subcommand("Dk", "Closed form of sum_n D_{k,n} x^n, k = 1, 2, 3");
  series_dk->add_option("k", k)->required();
  auto* series_lattice = series_cmd->add_subcommand("lattice", "sum_n D_{k,n} x^n from weighted lattice paths");
  series_lattice->add_option("k", k)->required();
  auto* series_sum = series_cmd->add_subcommand("Ehat-sum", "sum Ehat_{k,n} y^k x^n from the series over i");
  auto* series_raw = series_cmd->add_subcommand("E-sum", "The series over i before normalization (E_{k,n})");
  auto* series_cf = series_cmd->add_subcommand("Ehat-cf", "sum Ehat_{k,n} y^k x^n from the continued fraction");
  for (auto* sub : {series_dk, series_lattice, series_sum, series_raw, series_cf}) {
    sub->add_option("--order", order, "Truncation order in x")->capture_default_str();
    add_format(sub, format, poly_formats);
  }

  auto* verify_cmd = app.add_subcommand("verify", "Exhaustive check of a theorem (or 'all')");
  verify_cmd->add_option("check", check_name)->required();
  verify_cmd->add_option("--n", n, "Permutation length")->required();
  verify_cmd->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
  verify_cmd->add_option("--bound", bound, "Largest n accepted (at most 10)")->capture_default_str();
  add_format(verify_cmd, format, {"text", "json"});

  auto* dist_cmd = app.add_subcommand("dist", "Joint distribution of statistics");
  dist_cmd->add_option("stat-list", stat_list, "Comma-separated statistic names")->required();
  dist_cmd->add_option("--n", n, "Permutation length")->required();
  dist_cmd->add_option("--source", source, "perm or tab")->check(CLI::IsMember({"perm", "tab"}))->capture_default_str();
  dist_cmd->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
  dist_cmd->add_option("--bound", bound, "Largest n accepted (at most 10)")->capture_default_str();
  dist_cmd->add_flag("--csv", csv, "CSV output");
  dist_cmd->add_flag("--json", json, "JSON output");

  std::vector<std::string> argv_storage{"ptab"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (phi_cmd->parsed()) {
      const PermutationTableau t = parse_tableau(read_source(tableau_file, in));
      const Permutation p = phi(t);
      if (trace) {
        nlohmann::json traces = nlohmann::json::array();
        for (const auto& tr : zigzag_traces(t)) traces.push_back(to_json(tr));
        out << nlohmann::json{{"permutation", p.to_string()}, {"traces", traces}}.dump(2) << '\n';
      } else {
        out << p.to_string() << '\n';
      }
    } else if (phi_inv_cmd->parsed()) {
      const PermutationTableau t = phi_inverse(Permutation::parse(perm_text));
      if (format == "json") {
        out << to_json(t).dump(2) << '\n';
      } else {
        out << to_text(t);
      }
    } else if (psi_cmd->parsed()) {
      out << psi(Permutation::parse(perm_text)).to_string() << '\n';
    } else if (psi_inv_cmd->parsed()) {
      out << psi_inverse(Permutation::parse(perm_text)).to_string() << '\n';
    } else if (stats_perm->parsed()) {
      out << to_json(stat_bundle(Permutation::parse(perm_text))).dump(2) << '\n';
    } else if (stats_tab->parsed()) {
      out << to_json(tableau_stats(parse_tableau(read_source(tableau_file, in)))).dump(2) << '\n';
    } else if (count_cmd->parsed()) {
      out << count_vincular(Permutation::parse(perm_text), VincularPattern::parse(pattern_text)) << '\n';
    } else if (poly_f->parsed()) {
      write_polynomial(F_lambda(Partition::parse(shape_text)), format, out);
    } else if (poly_d->parsed()) {
      write_polynomial(D_kn(k, n, literal ? ShapeRange::whole_box : ShapeRange::full_first_row), format, out);
    } else if (poly_e->parsed()) {
      write_polynomial(E_kn_closed(k, n), format, out);
    } else if (poly_ehat->parsed()) {
      write_polynomial(E_hat(k, n), format, out);
    } else if (poly_b->parsed()) {
      write_polynomial(carlitz_B(n, k), format, out);
    } else if (series_dk->parsed()) {
      write_series(D_k_series(k, order), format, out);
    } else if (series_lattice->parsed()) {
      write_series(lattice_path_D(k, order), format, out);
    } else if (series_sum->parsed()) {
      write_series(E_hat_gf_series(order), format, out);
    } else if (series_raw->parsed()) {
      write_series(E_gf_series(order), format, out);
    } else if (series_cf->parsed()) {
      write_series(E_hat_cf_series(order), format, out);
    } else if (verify_cmd->parsed()) {
      const VerifyOptions options{jobs, bound};
      const auto reports = run_check(check_name, n, options);
      bool failed = false;
      nlohmann::json all = nlohmann::json::array();
      for (const auto& report : reports) {
        failed = failed || report.failed();
        if (format == "json") {
          all.push_back(report.to_json());
        } else {
          out << report.to_text();
        }
      }
      if (format == "json") out << all.dump(2) << '\n';
      return failed ? kExitCheckFailed : kExitOk;
    } else if (dist_cmd->parsed()) {
      check_bound(n, VerifyOptions{jobs, bound});
      const auto names = split_names(stat_list);
      const bool from_tableaux = source == "tab";
      const auto known = from_tableaux ? tableau_statistic_names() : scalar_statistic_names();
      for (const auto& name : names) {
        if (std::find(known.begin(), known.end(), name) == known.end()) {
          throw std::invalid_argument("unknown statistic '" + name + "'");
        }
      }
      const DistributionTable table = statistic_distribution(n, names, from_tableaux, jobs);
      if (csv) {
        table.write_csv(out);
      } else if (json) {
        out << table.to_json().dump(2) << '\n';
      } else {
        for (const auto& [key, count] : table.counts()) out << key_to_string(key) << ' ' << count.get_str() << '\n';
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace ptab
