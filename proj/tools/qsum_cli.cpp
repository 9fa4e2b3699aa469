// Command-line front end: every subcommand prints one result document.
// Exit status 0 means the question was decided (either way), 2 means the
// input was rejected, 1 means an internal error.

#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "qsum/expr.hpp"
#include "qsum/qde.hpp"
#include "qsum/qgosper.hpp"
#include "qsum/qshift.hpp"
#include "qsum/result_doc.hpp"
#include "qsum/summability.hpp"

namespace {

using namespace qsum;

constexpr int kExitInput = 2;
constexpr int kExitInternal = 1;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

QParam read_q(const std::string& text) {
  Rat value;
  try {
    value = parse_rat(text);
  } catch (const std::exception&) {
    throw InputError("q must be a rational other than 0, 1, -1");
  }
  return QParam(value);
}

RatFun read_ratfun(const std::string& label, const std::string& text, const QParam& q,
                   const VarNames& vars = kDefaultVars) {
  try {
    return parse_ratfun(text, q, vars);
  } catch (const ParseError& e) {
    throw InputError(label + ": " + e.what());
  } catch (const std::domain_error& e) {
    throw InputError(label + ": " + e.what());
  }
}

Poly read_poly(const std::string& label, const std::string& text, const QParam& q,
               const VarNames& vars = kDefaultVars) {
  RatFun f = read_ratfun(label, text, q, vars);
  if (!f.is_polynomial()) throw InputError(label + " must be a polynomial");
  return f.num() / f.den().constant_term();
}

VarNames split_vars(const std::string& text) {
  VarNames out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    if (item.empty() || item == "q") throw InputError("invalid variable list '" + text + "'");
    out.push_back(item);
  }
  if (out.empty() || out.size() > 2) throw InputError("--vars takes one or two names");
  return out;
}

void emit(const ResultDoc& doc, bool json, const std::string& text) {
  if (json)
    std::cout << to_json(doc).dump(2) << "\n";
  else
    std::cout << text << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-summability of bivariate rational functions"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Print a JSON result document");
  app.fallthrough();

  std::string q_text;
  auto add_q = [&](CLI::App* sub) {
    sub->add_option("--q", q_text, "The rational constant q (not 0, 1, -1)")->required();
  };

  std::string f_text, g_text, h_text, vars_text = "x,y", var_text;
  auto* qdisp = app.add_subcommand("qdisp", "q-dispersion set of two polynomials");
  qdisp->add_option("F", f_text)->required();
  qdisp->add_option("G", g_text)->required();
  qdisp->add_option("--vars", vars_text, "Comma separated variable names");
  add_q(qdisp);

  auto* summable = app.add_subcommand("summable", "Decide q-summability");
  summable->add_option("F", f_text)->required();
  summable->add_option("--var", var_text, "Test summability in this variable only")
      ->check(CLI::IsMember({"x", "y"}));
  add_q(summable);

  std::string b_text;
  int m = 1;
  auto* gosper = app.add_subcommand("gosper", "m-fold q-Gosper representation of b(x)/b(x q^m)");
  gosper->add_option("B", b_text)->required();
  gosper->add_option("--m", m)->required()->check(CLI::PositiveNumber);
  add_q(gosper);

  std::string a_text;
  int n = 0, j = 1, lambda = 1;
  long v = 0;
  auto* qde = app.add_subcommand("solve-qde", "Solve a/b = q^(-v j) tau_x^m tau_y^(-n) p - p");
  qde->add_option("--a", a_text)->required();
  qde->add_option("--b", b_text)->required();
  qde->add_option("--m", m)->required()->check(CLI::PositiveNumber);
  qde->add_option("--n", n)->required();
  qde->add_option("--v", v)->required();
  qde->add_option("--j", j)->required()->check(CLI::PositiveNumber);
  qde->add_option("--lambda", lambda)->required()->check(CLI::PositiveNumber);
  add_q(qde);

  auto* verify = app.add_subcommand("verify", "Check f = tau_x g - g + tau_y h - h");
  verify->add_option("F", f_text)->required();
  verify->add_option("G", g_text)->required();
  verify->add_option("H", h_text)->required();
  add_q(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    const QParam q = read_q(q_text);
    if (qdisp->parsed()) {
      const VarNames vars = split_vars(vars_text);
      const Poly f = read_poly("F", f_text, q, vars);
      const Poly g = read_poly("G", g_text, q, vars);
      if (f.is_zero() || g.is_zero()) throw InputError("F and G must be nonzero");
      const LatticeCoset c = q_dispersion(f, g, q, static_cast<int>(vars.size()));
      emit(dispersion_doc(render(f, vars) + "; " + render(g, vars), c, q), json, render_coset(c));
    } else if (summable->parsed()) {
      const RatFun f = read_ratfun("F", f_text, q);
      const SummabilityResult r = var_text.empty() ? bivariate_summable(f, q)
                                                   : univariate_summable(f, var_text == "x" ? kX : kY, q);
      std::string text;
      if (r.summable())
        text = "summable\ng = " + render(r.certificate().g) + "\nh = " + render(r.certificate().h);
      else
        text = "not_summable\nwitness: " + describe(r.obstruction());
      emit(summability_doc(f, r, q), json, text);
    } else if (gosper->parsed()) {
      const Poly b = read_poly("B", b_text, q);
      if (b.is_zero() || b.uses(kY)) throw InputError("B must be a nonzero polynomial in x");
      const GosperTriple t = m_fold_gosper(b, m, q);
      emit(gosper_doc(render(b), t, q), json,
           "A = " + render(t.A) + "\nB = " + render(t.B) + "\nC = " + render(t.C));
    } else if (qde->parsed()) {
      QdeInstance inst{read_poly("a", a_text, q), read_poly("b", b_text, q), m, n, v, j, lambda};
      if (inst.b.is_zero() || inst.b.uses(kY)) throw InputError("b must be a nonzero polynomial in x");
      if (inst.a.degree(kY) >= lambda) throw InputError("deg_y(a) must be below lambda");
      const auto p = solve_qde(inst, q);
      const std::string echo = "a = " + render(inst.a) + "; b = " + render(inst.b);
      emit(qde_doc(echo, p, q), json, p ? "p = " + render(*p) : "none");
    } else if (verify->parsed()) {
      const RatFun f = read_ratfun("F", f_text, q);
      const Certificate c{read_ratfun("G", g_text, q), read_ratfun("H", h_text, q)};
      const bool ok = verify_certificate(f, c, q);
      emit(verify_doc(f, c, ok, q), json, ok ? "true" : "false");
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return 0;
}
