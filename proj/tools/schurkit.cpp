#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "schur/bch.hpp"
#include "schur/krovi.hpp"
#include "schur/matrix_io.hpp"
#include "schur/tables.hpp"
#include "schur/verify.hpp"

using namespace schur;

namespace {

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(std::stoi(item));
  return out;
}

// "0;2,0;2,0,0" -> rows of a GT pattern, level 1 first
GTPattern parse_pattern(const std::string& s) {
  std::vector<std::vector<int>> rows;
  std::stringstream ss(s);
  std::string row;
  while (std::getline(ss, row, ';')) rows.push_back(parse_ints(row));
  return GTPattern(rows);
}

SchurTransform build(const std::string& method, int n, int d) {
  if (method == "krovi") return schur_unitary_krovi(n, d);
  if (method == "bch") return schur_unitary_bch(n, d);
  return schur_unitary_bch_highdim(n, d);
}

struct VerifyOptions {
  std::string suite = "all";
  int n = 3;
  int d = 2;
  double tol = kExactTol;
  double chain_tol = kChainTol;
  bool perturb = false;
};

int run_verify(const VerifyOptions& o) {
  std::vector<CheckReport> reports;
  const bool all = o.suite == "all";
  auto maybe_perturb = [&](SchurTransform u) { return o.perturb ? perturbed(u) : u; };
  if (all || o.suite == "equivariance") {
    for (const std::string method : {"krovi", "bch", "bch-highdim"}) {
      const SchurTransform u = maybe_perturb(build(method, o.n, o.d));
      reports.push_back(check_unitarity(u, method, o.tol));
      reports.push_back(check_schur_equivariance(u, Side::Sym, method, o.tol));
      reports.push_back(check_schur_equivariance(u, Side::Gl, method, o.chain_tol));
    }
  }
  if (all || o.suite == "compare") {
    const SchurTransform k = schur_unitary_krovi(o.n, o.d);
    const SchurTransform b = schur_unitary_bch(o.n, o.d);
    const SchurTransform h = schur_unitary_bch_highdim(o.n, o.d);
    reports.push_back(compare_pipelines(k, maybe_perturb(b), "krovi/bch", o.tol).report);
    reports.push_back(compare_pipelines(h, maybe_perturb(b), "bch-highdim/bch", o.tol).report);
  }
  if (all || o.suite == "lemmas") {
    if (o.n > 5) {
      if (!all) throw CLI::ValidationError("--n", "the lemma suite needs n <= 5");
      std::cout << "SKIP lemmas n=" << o.n << " [group algebra checks need n <= 5]\n";
    } else {
      auto more = lemma_suite(o.n, o.d, o.chain_tol, o.perturb);
      reports.insert(reports.end(), more.begin(), more.end());
    }
  }
  int failed = 0;
  for (const CheckReport& r : reports) {
    std::cout << r.str() << '\n';
    if (!r.pass) ++failed;
  }
  std::cout << reports.size() << " checks, " << failed << " failed\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schur transform builder and checker"};
  app.require_subcommand(1);

  std::size_t cap = dense_cap();

  auto* build_cmd = app.add_subcommand("build", "Build a Schur transform and write it as a matrix file");
  std::string method, out, format = "text";
  int n = 0, d = 0;
  build_cmd->add_option("--method", method)->required()->check(CLI::IsMember({"krovi", "bch", "bch-highdim"}));
  build_cmd->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  build_cmd->add_option("--d", d)->required()->check(CLI::PositiveNumber);
  build_cmd->add_option("--out", out)->required();
  build_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "binary"}));
  build_cmd->add_option("--cap", cap, "largest d^n allowed (env SCHUR_CAP)");

  auto* table_cmd = app.add_subcommand("table", "Emit coefficient tables as JSON lines");
  std::string kind, base, nu, top, mid, shape, mu, tableau, pattern, table_out;
  int table_n = 0;
  table_cmd->add_option("--kind", kind)->required()->check(CLI::IsMember({"kostka", "fsymbol", "rw", "ventry"}));
  table_cmd->add_option("--n", table_n, "kostka: size");
  table_cmd->add_option("--base", base, "fsymbol: base shape, e.g. 1");
  table_cmd->add_option("--nu", nu, "fsymbol: total shape, e.g. 2,1");
  table_cmd->add_option("--top", top, "rw: level-d row");
  table_cmd->add_option("--mid", mid, "rw: output level-(d-1) row");
  table_cmd->add_option("--shape", shape, "ventry: shape");
  table_cmd->add_option("--mu", mu, "ventry: composition");
  table_cmd->add_option("--tableau", tableau, "ventry: Yamanouchi word, e.g. 1,1,1,2,2");
  table_cmd->add_option("--pattern", pattern, "ventry: GT rows from level 1, ';' separated");
  table_cmd->add_option("--out", table_out, "file (default stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  VerifyOptions vo;
  verify_cmd->add_option("--suite", vo.suite)->check(CLI::IsMember({"all", "equivariance", "lemmas", "compare"}));
  verify_cmd->add_option("--n", vo.n)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--d", vo.d)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--tol", vo.tol, "tolerance for exact identities");
  verify_cmd->add_option("--chain-tol", vo.chain_tol, "tolerance for square-root product checks");
  verify_cmd->add_flag("--perturb", vo.perturb, "negative control: perturb U or V");
  verify_cmd->add_option("--cap", cap, "largest d^n allowed (env SCHUR_CAP)");

  CLI11_PARSE(app, argc, argv);

  try {
    set_dense_cap(cap);
    if (*build_cmd) {
      require_within_cap(checked_dimension(n, d), cap, "build");
      const SchurTransform u = build(method, n, d);
      save_matrix(out, MatrixFile{n, d, u.dense()}, format == "binary" ? MatrixFormat::Binary : MatrixFormat::Text);
      std::cout << method << " n=" << n << " d=" << d << " dim=" << u.dim() << " shapes=" << u.index().shapes().size()
                << " weight blocks=" << u.blocks().size() << " -> " << out << '\n';
      return 0;
    }
    if (*table_cmd) {
      std::vector<TableRow> rows;
      if (kind == "kostka") {
        if (table_n < 1) throw CLI::ValidationError("--n", "kostka needs --n >= 1");
        rows = kostka_rows(table_n);
      } else if (kind == "fsymbol") {
        if (nu.empty()) throw CLI::ValidationError("--nu", "fsymbol needs --nu");
        rows = fsymbol_rows(Partition(parse_ints(base)), Partition(parse_ints(nu)));
      } else if (kind == "rw") {
        if (top.empty()) throw CLI::ValidationError("--top", "rw needs --top");
        rows = rw_rows(parse_ints(top), parse_ints(mid));
      } else {
        if (shape.empty() || mu.empty()) throw CLI::ValidationError("--shape", "ventry needs --shape and --mu");
        std::optional<StandardTableau> t;
        std::optional<GTPattern> m;
        if (!tableau.empty()) t = StandardTableau::from_word(parse_ints(tableau));
        if (!pattern.empty()) m = parse_pattern(pattern);
        rows = ventry_rows(Partition(parse_ints(shape)), Composition(parse_ints(mu)), t, m);
      }
      if (table_out.empty()) {
        write_table(std::cout, rows);
      } else {
        std::ofstream os(table_out);
        if (!os) throw std::runtime_error("cannot open " + table_out);
        write_table(os, rows);
      }
      return 0;
    }
    require_within_cap(checked_dimension(vo.n, vo.d), cap, "verify");
    return run_verify(vo);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
