#include "drackn/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "drackn/constructions.hpp"
#include "drackn/cover.hpp"
#include "drackn/feasibility.hpp"
#include "drackn/io.hpp"
#include "drackn/lines.hpp"

namespace drackn {

namespace {

std::string slurp(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return slurp(in);
  std::ifstream file(path);
  if (!file) throw FormatError("cannot open '" + path + "'");
  return slurp(file);
}

template <class Parser>
auto parse_text(const std::string& text, Parser parser) {
  std::istringstream stream(text);
  return parser(stream);
}

std::string tuple_string(const std::vector<int>& g) {
  std::string out;
  for (std::size_t i = 0; i < g.size(); ++i) out += (i ? "," : "") + std::to_string(g[i]);
  return out;
}

std::vector<GroupElement> parse_subgroup(const std::string& text) {
  std::vector<GroupElement> out;
  std::istringstream in(text);
  for (std::string part; std::getline(in, part, ';');) {
    part.erase(std::remove_if(part.begin(), part.end(), [](unsigned char c) { return std::isspace(c); }), part.end());
    if (part.empty()) continue;
    GroupElement g;
    std::istringstream coords(part);
    for (std::string c; std::getline(coords, c, ',');) {
      try {
        std::size_t used = 0;
        g.push_back(std::stoi(c, &used));
        if (used != c.size()) throw std::invalid_argument(c);
      } catch (const std::exception&) {
        throw FormatError("--subgroup: bad coordinate '" + c + "' in '" + part + "'");
      }
    }
    out.push_back(std::move(g));
  }
  return out;
}

void print_certificate(std::ostream& out, const CoverCertificate& cert) {
  out << cert.summary_line() << '\n' << cert.spectrum_line() << '\n' << "routes combinatorial=pass algebraic=pass\n";
}

void print_lineset(std::ostream& out, const std::string& label, const LineSet& lines, LineField field) {
  const auto n = static_cast<std::int64_t>(lines.n);
  const auto d = static_cast<std::int64_t>(lines.d);
  const Rational bound = relative_bound(n, d);
  const std::int64_t absolute = absolute_bound(d, field);
  out << "# lines " << label << " n=" << n << " d=" << d << " alpha^2=" << lines.alpha_sq.to_string()
      << " relative_bound=" << bound.get_str() << " tight=" << (tight_frame_check(lines) ? "yes" : "no")
      << " absolute_bound(" << (field == LineField::real ? "real" : "complex") << ")=" << absolute
      << " attained=" << (n == absolute ? "yes" : "no") << '\n';
}

const char* verdict_text(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::not_applicable: return "n/a";
  }
  return "?";
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distance-regular antipodal covers of complete graphs and equiangular lines", "drackn"};
  app.require_subcommand(1);
  int jobs = 1;
  app.add_option("--jobs", jobs, "Parallel workers")->check(CLI::Range(1, 256));

  auto* construct = app.add_subcommand("construct", "Build a cover (or a test Seidel matrix)");
  construct->require_subcommand(1);
  int p = 0, m = 0, s = 0;
  std::string form_file;
  auto* thas = construct->add_subcommand("thas-somma", "Symplectic cover over (Z/p)^s");
  thas->add_option("-p", p, "Prime")->required();
  thas->add_option("-m", m, "Dimension of V")->required();
  thas->add_option("-s", s, "Dimension of U")->required();
  thas->add_option("--form", form_file, "FORM v1 file");
  int t = 0, d = 0;
  std::string skew_file, latin_file;
  auto* dc = construct->add_subcommand("dcff", "Skew-product cover over (Z/2)^(td)");
  dc->add_option("-t", t, "Scalar field degree")->required();
  dc->add_option("-d", d, "Odd dimension")->required();
  dc->add_option("--skew", skew_file, "SKEW v1 file");
  dc->add_option("--latin", latin_file, "LATIN v1 file");
  std::size_t conference_n = 6;
  std::uint64_t seed = 0;
  auto* conference = construct->add_subcommand("conference", "Seeded search for a +-1 Seidel matrix with S^2 = (n-1)I");
  conference->add_option("-n", conference_n, "Order")->required();
  conference->add_option("--seed", seed, "Random seed");

  std::string file;
  auto* verify = app.add_subcommand("verify", "Certify a cover file");
  verify->add_option("FILE", file);

  std::size_t char_index = 0;
  std::string which = "both";
  bool full_gram = false;
  auto* c2l = app.add_subcommand("cover-to-lines", "Seidel matrix and line sets of one character block");
  c2l->add_option("FILE", file);
  c2l->add_option("--char", char_index, "Character index (1 .. r-1)")->required();
  c2l->add_option("--which", which, "Line set(s) to report")->check(CLI::IsMember({"tau", "theta", "both"}));
  c2l->add_flag("--full-gram", full_gram, "Emit Gram matrices as comment lines");

  int r = 0;
  auto* l2c = app.add_subcommand("lines-to-cover", "Cyclic cover from a Seidel matrix of r-th roots of unity");
  l2c->add_option("FILE", file);
  l2c->add_option("--r", r, "Prime r")->required();

  auto* c2gh = app.add_subcommand("cover-to-gh", "Generalized Hadamard matrix of a cover with delta = -2");
  c2gh->add_option("FILE", file);
  auto* gh2c = app.add_subcommand("gh-to-cover", "Cover from a self-adjoint GH matrix with constant diagonal");
  gh2c->add_option("FILE", file);

  std::string subgroup;
  auto* quot = app.add_subcommand("quotient", "Quotient cover by a subgroup");
  quot->add_option("FILE", file);
  quot->add_option("--subgroup", subgroup, "Generators g1;g2;... as comma tuples")->required();

  auto* dbl = app.add_subcommand("double-real", "Verify the 2-fold cover of a +-1 Seidel matrix");
  dbl->add_option("FILE", file);

  std::int64_t fn = 0, fr = 0, fc = 0;
  auto* feasible = app.add_subcommand("feasible", "Run the feasibility battery on (n, r, c)");
  feasible->add_option("N", fn)->required();
  feasible->add_option("R", fr)->required();
  feasible->add_option("C", fc)->required();

  std::string case_name;
  std::int64_t t_max = 0;
  bool tsv = false, include_unpublished = false, include_two_graph = false;
  auto* enumerate = app.add_subcommand("enumerate", "Feasible parameters of an absolute-bound family");
  enumerate->add_option("--case", case_name, "Ia, Ib, IIa or IIb")->required()->check(CLI::IsMember({"Ia", "Ib", "IIa", "IIb"}));
  enumerate->add_option("--t-max", t_max, "Largest t")->required()->check(CLI::Range(std::int64_t{2}, std::int64_t{100000}));
  enumerate->add_flag("--tsv", tsv, "Tab-separated output with header");
  enumerate->add_flag("--include-unpublished", include_unpublished, "Keep rows outside the known tables");
  enumerate->add_flag("--include-two-graph", include_two_graph, "Keep r = 2 rows");

  for (auto* sub : {construct, verify, c2l, l2c, c2gh, gh2c, quot, dbl, feasible, enumerate}) sub->fallthrough();
  for (auto* sub : {thas, dc, conference}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitFormat;
  }

  try {
    if (*thas) {
      std::optional<AlternatingForm> form;
      if (!form_file.empty()) form = parse_text(read_input(form_file, in), parse_form);
      out << emit_cover(thas_somma(p, m, s, form));
    } else if (*dc) {
      std::optional<SkewProduct> skew;
      std::optional<LatinSquare> latin;
      if (!skew_file.empty()) skew = parse_text(read_input(skew_file, in), parse_skew);
      if (!latin_file.empty()) latin = parse_text(read_input(latin_file, in), parse_latin);
      out << emit_cover(dcff(t, d, skew, latin));
    } else if (*conference) {
      out << emit_seidel(find_conference_seidel(conference_n, seed));
    } else if (*verify) {
      print_certificate(out, drackn_verify(parse_text(read_input(file, in), parse_cover), jobs));
    } else if (*c2l) {
      const auto f = parse_text(read_input(file, in), parse_cover);
      const auto result = cover_to_lines(f, char_index, jobs);
      const auto& spec = result.lines.spectrum;
      const LineField field = result.seidel.root_order == 2 ? LineField::real : LineField::complex;
      out << emit_seidel(result.seidel);
      out << "# cover " << result.certificate.summary_line() << '\n';
      out << "# character " << char_index << " exponents=" << tuple_string(characters_of(f.group())[char_index].exponents) << '\n';
      out << "# seidel theta=" << spec.theta.to_string() << " tau=" << spec.tau.to_string() << " m_theta=" << spec.m_theta
          << " m_tau=" << spec.m_tau << '\n';
      if (which != "theta") print_lineset(out, "tau", result.lines.tau_set, field);
      if (which != "tau") print_lineset(out, "theta", result.lines.theta_set, field);
      if (full_gram) {
        if (which != "theta") out << emit_gram(result.lines.tau_set, "tau");
        if (which != "tau") out << emit_gram(result.lines.theta_set, "theta");
      }
    } else if (*l2c) {
      const auto result = lines_to_cover(parse_text(read_input(file, in), parse_seidel), r, jobs);
      out << emit_cover(result.cover);
      out << "# c = (1/r)((n-2) + (2d-n)/(alpha d)) with d=" << result.d << " alpha^2=" << result.alpha_sq.to_string()
          << " gives c=" << result.c_formula.to_string() << '\n';
      out << "# " << result.certificate.summary_line() << '\n';
    } else if (*c2gh) {
      const auto h = cover_to_gh(parse_text(read_input(file, in), parse_cover), jobs);
      const auto check = gh_validate(h);
      if (!check.ok) throw VerificationError("gh-identity", check.detail);
      out << emit_gh(h);
      out << "# gh_validate pass: H H* = " << h.n << "I + " << h.n / h.group.order() << " G(J - I)\n";
    } else if (*gh2c) {
      const auto f = gh_to_cover(parse_text(read_input(file, in), parse_gh));
      const auto cert = drackn_verify(f, jobs);
      out << emit_cover(f);
      out << "# " << cert.summary_line() << '\n';
    } else if (*quot) {
      const auto f = parse_text(read_input(file, in), parse_cover);
      out << emit_cover(quotient(f, parse_subgroup(subgroup)));
    } else if (*dbl) {
      const auto seidel = parse_text(read_input(file, in), parse_seidel);
      const auto graph = double_real(seidel);
      out << "# doubled graph has " << graph.size() << " vertices\n";
      print_certificate(out, verify_cover_graph(graph, static_cast<int>(seidel.n()), 2, jobs));
    } else if (*feasible) {
      const auto report = feasibility_battery(fn, fr, fc);
      const auto& pr = report.params;
      out << "PARAMS n=" << pr.n << " r=" << pr.r << " c=" << pr.c << " delta=" << pr.delta << " theta=" << pr.theta.to_string()
          << " tau=" << pr.tau.to_string() << " m_theta=" << pr.m_theta.to_string() << " m_tau=" << pr.m_tau.to_string() << '\n';
      for (const auto& cond : report.conditions) {
        if (cond.verdict == Verdict::fail) {
          out << "FAIL (" << cond.name << ") " << cond.witness << '\n';
        } else {
          out << "(" << cond.name << ") " << verdict_text(cond.verdict) << '\n';
        }
      }
      out << (report.pass ? "FEASIBLE" : "INFEASIBLE") << '\n';
      return report.pass ? kExitOk : kExitFail;
    } else if (*enumerate) {
      const auto family = *parse_family_case(case_name);
      const auto rows = family_enumerate(family, t_max, jobs);
      const bool with_flags = include_unpublished || include_two_graph;
      std::size_t omitted_unpublished = 0, omitted_two_graph = 0;
      if (tsv) out << tsv_header(with_flags) << '\n';
      for (const auto& row : rows) {
        if (row.two_graph && !include_two_graph) {
          ++omitted_two_graph;
          continue;
        }
        if (row.unpublished && !include_unpublished) {
          ++omitted_unpublished;
          continue;
        }
        if (tsv) {
          out << tsv_row(row, with_flags) << '\n';
        } else {
          const auto& pr = row.params;
          out << "case=" << case_name << " t=" << (row.sporadic ? std::string("sqrt(5)") : std::to_string(row.t)) << " n=" << pr.n
              << " r=" << pr.r << " c=" << pr.c << " delta=" << pr.delta << " theta=" << pr.theta.to_string()
              << " tau=" << pr.tau.to_string() << " m_theta=" << pr.m_theta.to_string() << " m_tau=" << pr.m_tau.to_string()
              << " flags=" << flags_of(row) << '\n';
        }
      }
      if (omitted_unpublished + omitted_two_graph > 0)
        err << "# omitted " << omitted_unpublished << " row(s) flagged unpublished and " << omitted_two_graph
            << " flagged two-graph (see --include-unpublished, --include-two-graph)\n";
    }
    return kExitOk;
  } catch (const VerificationError& e) {
    out << "FAIL " << e.condition() << ' ' << e.witness() << '\n';
    return kExitFail;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFormat;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitFormat;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitFormat;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFormat;
  }
}

}  // namespace drackn
