#include "vn/cli.hpp"

#include <CLI11.hpp>
#include <functional>
#include <iostream>
#include <sstream>

#include "vn/embeddings.hpp"
#include "vn/orbits.hpp"
#include "vn/representation.hpp"
#include "vn/serialize.hpp"
#include "vn/verify.hpp"

namespace vn {

namespace {

Table read_table(const std::string& payload, int base) {
  std::string_view v(payload);
  while (!v.empty() && v.front() == ' ') v.remove_prefix(1);
  if (!v.empty() && v.front() == '{') return table_from_json(payload);
  return Table::parse(payload, base);
}

CuntzSum read_sum(const std::string& payload, int base) {
  std::string_view v(payload);
  while (!v.empty() && v.front() == ' ') v.remove_prefix(1);
  if (!v.empty() && v.front() == '{') return sum_from_json(payload);
  return CuntzSum::parse(payload, base);
}

// Commands accept their payload as an argument or, when omitted, one
// payload per stdin line.
void each_payload(const std::string& given, std::istream& in,
                  const std::function<void(const std::string&)>& fn) {
  if (!given.empty()) {
    fn(given);
    return;
  }
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    fn(line);
  }
}

struct Shared {
  int n = 2;
  int k = 2;
  int depth = 3;
  int samples = 100;
  std::uint64_t seed = 1;
  bool json = false;
  std::string x = "0";
  std::string y;
};

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Computable Higman-Thompson elements, Cuntz monomials and orbit representations"};
  app.require_subcommand(1);
  Shared o;
  std::string payload, payload2, suite, basis_csv;
  int orbit_depth = 3;
  int max_steps = 256;
  bool parallel = false;

  auto add_n = [&](CLI::App* c) { c->add_option("--n", o.n, "alphabet size"); };
  auto add_json = [&](CLI::App* c) { c->add_flag("--json", o.json, "JSON output"); };

  CLI::App* c_parse = app.add_subcommand("parse", "validate a table, print its canonical form");
  add_n(c_parse);
  add_json(c_parse);
  c_parse->add_option("table", payload, "table text or JSON");

  CLI::App* c_reduce = app.add_subcommand("reduce", "minimal form of a table");
  add_n(c_reduce);
  add_json(c_reduce);
  c_reduce->add_option("table", payload, "table text or JSON");

  CLI::App* c_compose = app.add_subcommand("compose", "compose two tables (right one acts first)");
  add_n(c_compose);
  add_json(c_compose);
  c_compose->add_option("outer", payload, "applied second")->required();
  c_compose->add_option("inner", payload2, "applied first")->required();

  CLI::App* c_invert = app.add_subcommand("invert", "inverse of a table");
  add_n(c_invert);
  add_json(c_invert);
  c_invert->add_option("table", payload, "table text or JSON");

  CLI::App* c_classify = app.add_subcommand("classify", "F, T or V");
  add_n(c_classify);
  c_classify->add_option("table", payload, "table text or JSON");

  CLI::App* c_eval = app.add_subcommand("eval", "evaluate the piecewise-linear map at a point");
  add_n(c_eval);
  c_eval->add_option("table", payload, "table text or JSON")->required();
  c_eval->add_option("point", o.y, "rational point in [0,1)");

  CLI::App* c_embed = app.add_subcommand("embed", "embed a table over k(n-1)+1 letters into base n");
  add_n(c_embed);
  add_json(c_embed);
  c_embed->add_option("--k", o.k, "embedding depth");
  c_embed->add_option("table", payload, "table text or JSON");

  CLI::App* c_psi = app.add_subcommand("psi", "operator sum of a table");
  add_n(c_psi);
  add_json(c_psi);
  c_psi->add_option("table", payload, "table text or JSON");

  CLI::App* c_orbit = app.add_subcommand("orbit", "sample the generalized orbit of a point");
  add_n(c_orbit);
  add_json(c_orbit);
  c_orbit->add_option("--depth", o.depth, "preimage rounds");
  c_orbit->add_option("point", payload, "rational point in [0,1)");

  CLI::App* c_equiv = app.add_subcommand("equiv", "same orbit?");
  add_n(c_equiv);
  c_equiv->add_option("x", payload, "first point");
  c_equiv->add_option("y", payload2, "second point");

  CLI::App* c_act = app.add_subcommand("act", "move a point with the operator sum, cross-checked");
  add_n(c_act);
  c_act->add_option("table", payload, "table text or JSON")->required();
  c_act->add_option("point", o.y, "rational point in [0,1)");

  CLI::App* c_uimage = app.add_subcommand("uimage", "transport a point through the intertwiner");
  add_n(c_uimage);
  c_uimage->add_option("--k", o.k, "embedding depth");
  c_uimage->add_option("--x", o.x, "orbit anchor");
  c_uimage->add_option("--max-steps", max_steps, "path length bound");
  c_uimage->add_option("point", o.y, "point in the orbit of the anchor");

  CLI::App* c_matrix = app.add_subcommand("matrix", "finite matrix section of an operator sum");
  add_n(c_matrix);
  c_matrix->add_option("--x", o.x, "orbit anchor for the basis");
  c_matrix->add_option("--depth", o.depth, "orbit sampling depth");
  c_matrix->add_option("--basis", basis_csv, "explicit comma-separated basis points");
  c_matrix->add_flag("--parallel", parallel, "fan columns across threads");
  c_matrix->add_option("sum", payload, "sum text or JSON")->required();

  CLI::App* c_verify = app.add_subcommand("verify", "run a property suite");
  add_n(c_verify);
  c_verify->add_option("--k", o.k, "embedding depth");
  c_verify->add_option("--depth", o.depth, "table depth for random elements");
  c_verify->add_option("--orbit-depth", orbit_depth, "orbit sampling depth");
  c_verify->add_option("--samples", o.samples, "number of randomized cases");
  c_verify->add_option("--seed", o.seed, "base seed");
  c_verify->add_option("--x", o.x, "orbit anchor");
  c_verify->add_flag("--parallel", parallel, "run cases across threads");
  c_verify->add_option("suite", suite, "one of: group psi iota action embedding intertwine crho")
      ->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    auto table_out = [&](const Table& t) {
      out << (o.json ? table_to_json(t) : t.str()) << "\n";
    };
    if (c_parse->parsed()) {
      each_payload(payload, std::cin,
                   [&](const std::string& p) { table_out(read_table(p, o.n)); });
    } else if (c_reduce->parsed()) {
      each_payload(payload, std::cin,
                   [&](const std::string& p) { table_out(reduce(read_table(p, o.n))); });
    } else if (c_compose->parsed()) {
      table_out(compose(read_table(payload, o.n), read_table(payload2, o.n)));
    } else if (c_invert->parsed()) {
      each_payload(payload, std::cin,
                   [&](const std::string& p) { table_out(invert(read_table(p, o.n))); });
    } else if (c_classify->parsed()) {
      each_payload(payload, std::cin, [&](const std::string& p) {
        out << class_str(classify(read_table(p, o.n))) << "\n";
      });
    } else if (c_eval->parsed()) {
      Table t = read_table(payload, o.n);
      PLMap m = table_to_plmap(t);
      each_payload(o.y, std::cin, [&](const std::string& p) {
        out << rat_str(evaluate(m, parse_point(p))) << "\n";
      });
    } else if (c_embed->parsed()) {
      int m = source_base(o.n, o.k);
      each_payload(payload, std::cin, [&](const std::string& p) {
        table_out(embed_table(read_table(p, m), o.n, o.k));
      });
    } else if (c_psi->parsed()) {
      each_payload(payload, std::cin, [&](const std::string& p) {
        CuntzSum s = psi(read_table(p, o.n));
        out << (o.json ? sum_to_json(s) : s.str()) << "\n";
      });
    } else if (c_orbit->parsed()) {
      each_payload(payload, std::cin, [&](const std::string& p) {
        std::vector<Rational> pts = enumerate_orbit(parse_point(p), o.n, o.depth);
        if (o.json) {
          out << points_to_json(pts) << "\n";
        } else {
          for (const Rational& q : pts) out << rat_str(q) << "\n";
        }
      });
    } else if (c_equiv->parsed()) {
      auto answer = [&](const std::string& xs, const std::string& ys) {
        out << (equivalent(parse_point(xs), parse_point(ys), o.n) ? "true" : "false")
            << "\n";
      };
      if (!payload.empty() && !payload2.empty()) {
        answer(payload, payload2);
      } else if (payload.empty() && payload2.empty()) {
        each_payload("", std::cin, [&](const std::string& line) {
          std::istringstream in(line);
          std::string xs, ys;
          if (!(in >> xs >> ys)) throw Error("need two points per line");
          answer(xs, ys);
        });
      } else {
        throw Error("equiv needs both points or neither");
      }
    } else if (c_act->parsed()) {
      Table t = read_table(payload, o.n);
      CuntzSum s = psi(t);
      PLMap m = table_to_plmap(t);
      bool mismatch = false;
      each_payload(o.y, std::cin, [&](const std::string& p) {
        Rational y = parse_point(p);
        FormalVector moved = apply_sum(s, FormalVector::unit(o.n, y));
        auto pt = moved.as_unit();
        Rational mapped = evaluate(m, y);
        if (!pt || !(*pt == mapped)) {
          mismatch = true;
          err << "operator sum and map disagree at " << rat_str(y) << "\n";
          return;
        }
        out << rat_str(*pt) << "\n";
      });
      if (mismatch) return 1;
    } else if (c_uimage->parsed()) {
      Rational anchor = parse_point(o.x);
      each_payload(o.y, std::cin, [&](const std::string& p) {
        out << rat_str(u_image(parse_point(p), anchor, o.n, o.k, max_steps)) << "\n";
      });
    } else if (c_matrix->parsed()) {
      CuntzSum s = read_sum(payload, o.n);
      std::vector<Rational> basis;
      if (!basis_csv.empty()) {
        std::istringstream in(basis_csv);
        std::string tok;
        while (std::getline(in, tok, ',')) basis.push_back(parse_point(tok));
      } else {
        basis = enumerate_orbit(parse_point(o.x), o.n, o.depth);
      }
      out << matrix_to_json(matrix_section(s, std::move(basis), parallel)) << "\n";
    } else if (c_verify->parsed()) {
      SuiteParams p;
      p.n = o.n;
      p.k = o.k;
      p.samples = o.samples;
      p.depth = o.depth;
      p.orbit_depth = orbit_depth;
      p.seed = o.seed;
      p.points = {parse_point(o.x)};
      SuiteReport rep = run_cases(suite, build_suite(suite, p), parallel);
      out << report_line(rep) << "\n";
      if (!rep.ok()) {
        err << "counterexample: " << rep.first_failure << "\n";
        return 1;
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace vn
