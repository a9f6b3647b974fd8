// forestcalc: command-line front end to the library.
//
// Exit status: 0 on success, 1 when a requested check fails, 2 on usage,
// parse or precondition errors.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "forestcalc/bseries.hpp"
#include "forestcalc/ck_hopf.hpp"
#include "forestcalc/conv.hpp"
#include "forestcalc/errors.hpp"
#include "forestcalc/io.hpp"
#include "forestcalc/nap.hpp"
#include "forestcalc/operads.hpp"
#include "forestcalc/prelie.hpp"
#include "forestcalc/product_table.hpp"
#include "forestcalc/renorm.hpp"
#include "forestcalc/structures.hpp"
#include "forestcalc/substitution.hpp"
#include "forestcalc/vector_fields.hpp"

using namespace forestcalc;

namespace {

int status = 0;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    write_text_file(out_path, text);
  }
}

AntipodeMethod antipode_method(const std::string& name) {
  if (name == "left" || name == "left_recursion") return AntipodeMethod::left_recursion;
  if (name == "right" || name == "right_recursion") return AntipodeMethod::right_recursion;
  if (name == "geometric") return AntipodeMethod::geometric;
  throw PreconditionError("unknown antipode method '" + name + "'");
}

// Same kind, values and palette, known only up to `degree` vertices.
template <class Scalar>
Functional<Scalar> restrict_to(const Functional<Scalar>& phi, std::size_t degree) {
  if (degree > phi.truncation()) {
    throw TruncationError("the input is known to " + std::to_string(phi.truncation()) + " vertices only, " +
                          std::to_string(degree) + " requested");
  }
  Functional<Scalar> out(phi.kind(), degree, phi.zero(), phi.colors());
  for (const auto& [f, v] : phi.stored()) {
    if (f.vertex_count() <= degree) out.set(f, v);
  }
  return out;
}

// A multiplicative result is written by its tree values only.
template <class Scalar>
Functional<Scalar> compact(const Functional<Scalar>& phi) {
  if (phi.kind() == FunctionalKind::character || !is_character(phi)) return phi;
  Functional<Scalar> out(FunctionalKind::character, phi.truncation(), phi.zero(), phi.colors());
  for (const auto& [f, v] : phi.stored()) {
    if (f.is_tree()) out.set(f, v);
  }
  return out;
}

BSeries restrict_to(const BSeries& alpha, std::size_t order) {
  if (order > alpha.order) {
    throw TruncationError("B-series known to order " + std::to_string(alpha.order) + " only, " +
                          std::to_string(order) + " requested");
  }
  BSeries out = alpha;
  out.order = order;
  std::erase_if(out.tree_coeffs, [&](const auto& kv) { return kv.first.vertex_count() > order; });
  return out;
}

std::vector<Rational> parse_point(const std::string& text) {
  std::vector<Rational> o;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) o.push_back(parse_rational(item));
  return o;
}

void add_tree_commands(CLI::App& app) {
  static std::string forest_text;
  static std::string method = "left";
  static bool reduced = false;
  static int iterations = 0;
  auto* cop = app.add_subcommand("coproduct", "Connes-Kreimer coproduct of a forest");
  cop->add_option("forest", forest_text, "forest, e.g. \"[[][]]\"")->required();
  cop->add_flag("--reduced", reduced, "drop the u x 1 and 1 x u terms");
  cop->add_option("--iterations", iterations, "k-fold iterated reduced coproduct")->check(CLI::PositiveNumber);
  cop->callback([] {
    const Forest u = parse_forest(forest_text);
    if (iterations > 0) {
      emit(to_string(reduced_coproduct(u, iterations)), "");
    } else {
      emit(to_string(reduced ? reduced_coproduct(u) : coproduct(u)), "");
    }
  });

  static std::string anti_text;
  auto* anti = app.add_subcommand("antipode", "antipode of the Connes-Kreimer Hopf algebra");
  anti->add_option("forest", anti_text)->required();
  anti->add_option("--method", method, "left | right | geometric")->capture_default_str();
  anti->callback([] { emit(to_string(antipode(parse_forest(anti_text), antipode_method(method))), ""); });

  static std::string graft_s, graft_t;
  auto* g = app.add_subcommand("graft", "left pre-Lie grafting s -> t");
  g->add_option("s", graft_s)->required();
  g->add_option("t", graft_t)->required();
  g->callback([] { emit(to_string(graft(parse_tree(graft_s), parse_tree(graft_t))), ""); });

  static std::string but_s, but_t;
  auto* b = app.add_subcommand("butcher", "Butcher product: graft t onto the root of s");
  b->add_option("s", but_s)->required();
  b->add_option("t", but_t)->required();
  b->callback([] { emit(butcher_product(parse_tree(but_s), parse_tree(but_t)).str(), ""); });

  static std::size_t magnus_order = 5;
  auto* mag = app.add_subcommand("magnus", "Magnus expansion Omega of the one-vertex tree");
  mag->add_option("--order", magnus_order, "largest vertex count kept")->capture_default_str();
  mag->callback([] { emit(to_string(magnus_omega(magnus_order)), ""); });

  static std::size_t bch_order = 4;
  auto* bch_cmd = app.add_subcommand("bch", "BCH series of two vertices of colors 0 and 1");
  bch_cmd->add_option("--order", bch_order, "largest vertex count kept")->capture_default_str();
  bch_cmd->callback([] {
    const TreeSum a = generator(0);
    const TreeSum bb = generator(1);
    emit(to_string(bch(a, bb, bch_order)), "");
  });

  static std::string contract_text;
  auto* cc = app.add_subcommand("contract-coproduct", "extraction-contraction coproduct of a tree");
  cc->add_option("tree", contract_text)->required();
  cc->callback([] { emit(to_string(contraction_coproduct(parse_tree(contract_text))), ""); });
}

void add_functional_commands(CLI::App& app) {
  static std::string a_path, b_path, out_path;
  auto* conv = app.add_subcommand("convolve", "convolution product of two coefficient files");
  conv->add_option("a", a_path)->required()->check(CLI::ExistingFile);
  conv->add_option("b", b_path)->required()->check(CLI::ExistingFile);
  conv->add_option("--out", out_path, "output coefficient file (default: stdout)");
  conv->callback([] {
    AnyFunctional a = parse_coefficient_file(read_text_file(a_path));
    AnyFunctional b = parse_coefficient_file(read_text_file(b_path));
    if (a.index() != b.index()) throw MismatchError("the two files have different coefficient rings");
    std::visit(
        [&](const auto& phi) {
          using F = std::decay_t<decltype(phi)>;
          const F& psi = std::get<F>(b);
          emit(to_coefficient_file(compact(convolve(phi, psi))), out_path);
        },
        a);
  });

  static std::string phi_path, scheme = "ms", minus_path, plus_path, bmethod = "recursive";
  static std::optional<std::size_t> degree;
  auto* bk = app.add_subcommand("birkhoff", "Birkhoff decomposition of a Laurent-valued character");
  bk->add_option("phi", phi_path)->required()->check(CLI::ExistingFile);
  bk->add_option("--scheme", scheme, "renormalization scheme (ms)")->capture_default_str();
  bk->add_option("--degree", degree, "truncation degree (default: the file's)");
  bk->add_option("--method", bmethod, "recursive | iterative")->capture_default_str();
  bk->add_option("--out-minus", minus_path, "file for phi_-");
  bk->add_option("--out-plus", plus_path, "file for phi_+");
  bk->callback([] {
    if (scheme != "ms") throw PreconditionError("unknown scheme '" + scheme + "'; only ms is built in");
    BirkhoffMethod m;
    if (bmethod == "recursive") {
      m = BirkhoffMethod::recursive;
    } else if (bmethod == "iterative") {
      m = BirkhoffMethod::iterative;
    } else {
      throw PreconditionError("unknown method '" + bmethod + "'");
    }
    LaurentFunctional phi = parse_laurent_functional(read_text_file(phi_path));
    if (degree) phi = restrict_to(phi, *degree);
    BirkhoffPair pair = birkhoff(phi, m, minimal_subtraction());
    pair.phi_minus = compact(pair.phi_minus);
    pair.phi_plus = compact(pair.phi_plus);
    if (minus_path.empty() && plus_path.empty()) {
      std::cout << "# phi_minus\n" << to_coefficient_file(pair.phi_minus) << "# phi_plus\n"
                << to_coefficient_file(pair.phi_plus);
      return;
    }
    if (!minus_path.empty()) write_text_file(minus_path, to_coefficient_file(pair.phi_minus));
    if (!plus_path.empty()) write_text_file(plus_path, to_coefficient_file(pair.phi_plus));
  });

  static std::string alpha_path, beta_path, sub_out;
  static std::optional<std::size_t> sub_order;
  auto* sub = app.add_subcommand("substitute", "substitution alpha * beta of two B-series files");
  sub->add_option("alpha", alpha_path, "needs empty 0 and value 1 on the one-vertex tree")
      ->required()
      ->check(CLI::ExistingFile);
  sub->add_option("beta", beta_path)->required()->check(CLI::ExistingFile);
  sub->add_option("--order", sub_order, "largest tree kept (default: both files' minimum)");
  sub->add_option("--out", sub_out, "output B-series file (default: stdout)");
  sub->callback([] {
    BSeries alpha = parse_bseries_file(read_text_file(alpha_path));
    BSeries beta = parse_bseries_file(read_text_file(beta_path));
    if (sub_order) {
      alpha = restrict_to(alpha, *sub_order);
      beta = restrict_to(beta, *sub_order);
    }
    emit(to_bseries_file(bseries_substitute(alpha, beta)), sub_out);
  });
}

void add_field_commands(CLI::App& app) {
  static std::string tree_text, method = "recursive", frozen;
  static std::vector<std::string> field_paths;
  auto* ed = app.add_subcommand("elemdiff", "elementary differential of a tree for polynomial vector fields");
  ed->add_option("tree", tree_text)->required();
  ed->add_option("--field", field_paths, "vector field file; repeat once per color")
      ->required()
      ->check(CLI::ExistingFile);
  ed->add_option("--method", method, "recursive | closed")->capture_default_str();
  ed->add_option("--frozen-at", frozen, "comma separated point O for the frozen variant");
  ed->callback([] {
    std::vector<PolyVectorField> fields;
    for (const auto& p : field_paths) fields.push_back(read_vector_field_file(p));
    const RootedTree t = parse_tree(tree_text);
    const CayleyMethod m = parse_cayley_method(method);
    const PolyVectorField out =
        frozen.empty() ? cayley(t, fields, m) : frozen_cayley(t, fields, parse_point(frozen), m);
    emit(to_string(out), "");
  });

  auto* bs = app.add_subcommand("bseries", "B-series operations");
  bs->require_subcommand(1);

  static std::string a_path, b_path, verify_path, out_path;
  static std::optional<std::size_t> order;
  auto* comp = bs->add_subcommand("compose", "alpha * beta, the series of B(beta) after B(alpha)");
  comp->add_option("alpha", a_path, "the method applied first")->required()->check(CLI::ExistingFile);
  comp->add_option("beta", b_path, "the method applied second")->required()->check(CLI::ExistingFile);
  comp->add_option("--order", order, "largest tree kept (default: both files' minimum)");
  comp->add_option("--verify-field", verify_path, "check B(beta) o B(alpha) = B(alpha * beta) on this field")
      ->check(CLI::ExistingFile);
  comp->add_option("--out", out_path, "output B-series file (default: stdout)");
  comp->callback([] {
    BSeries alpha = parse_bseries_file(read_text_file(a_path));
    BSeries beta = parse_bseries_file(read_text_file(b_path));
    if (order) {
      alpha = restrict_to(alpha, *order);
      beta = restrict_to(beta, *order);
    }
    const BSeries ab = bseries_compose(alpha, beta);
    emit(to_bseries_file(ab), out_path);
    if (!verify_path.empty()) {
      const PolyVectorField x = read_vector_field_file(verify_path);
      const HSeriesMap lhs = compose(bseries_eval(beta, x), bseries_eval(alpha, x));
      const HSeriesMap rhs = bseries_eval(ab, x);
      const bool ok = lhs == rhs;
      std::cerr << "verify through h^" << ab.order << ": " << (ok ? "PASS" : "FAIL") << "\n";
      if (!ok) status = 1;
    }
  });

  static std::string eval_path, eval_field;
  auto* ev = bs->add_subcommand("eval", "truncated expansion of B(alpha; X) in powers of h");
  ev->add_option("alpha", eval_path)->required()->check(CLI::ExistingFile);
  ev->add_option("--field", eval_field)->required()->check(CLI::ExistingFile);
  ev->callback([] {
    emit(to_string(bseries_eval(parse_bseries_file(read_text_file(eval_path)), read_vector_field_file(eval_field))),
         "");
  });

  static std::string tab_path;
  static std::size_t rk_order = 4;
  auto* rk = bs->add_subcommand("rk", "B-series of a Runge-Kutta tableau");
  rk->add_option("tableau", tab_path)->required()->check(CLI::ExistingFile);
  rk->add_option("--order", rk_order)->capture_default_str();
  rk->callback([] { emit(to_bseries_file(rk_to_bseries(read_tableau_file(tab_path), rk_order)), ""); });
}

void add_check_commands(CLI::App& app) {
  auto* op = app.add_subcommand("operad", "operad axiom suites");
  op->require_subcommand(1);
  static std::string which = "prelie";
  static int max_arity = 3;
  auto* oc = op->add_subcommand("check", "composition, unit and equivariance axioms");
  oc->add_option("--which", which, "assoc | com | prelie")->capture_default_str();
  oc->add_option("--max-arity", max_arity,
                 "largest arity of each argument; prelie at 4 takes a few minutes")
      ->capture_default_str()
      ->check(CLI::Range(1, 6));
  oc->callback([] {
    const AxiomReport r = check_operad_axioms(*make_operad(which), max_arity);
    emit(to_string(r), "");
    if (!r.passed()) status = 1;
  });

  static std::string swhich, table_path, succ_path;
  static int max_length = 3, alphabet = 3, prototype = 0;
  auto* chk = app.add_subcommand("check", "identity checks on product tables and word carriers");
  chk->add_option("--which", swhich,
                  "associative | left_prelie | right_prelie | left_nap | novikov | assosymmetric | "
                  "dendriform | zinbiel_nap | shuffle")
      ->required();
  chk->add_option("--table", table_path, "product table (the < product for dendriform checks)")
      ->check(CLI::ExistingFile);
  chk->add_option("--succ", succ_path, "table of the > product for dendriform and zinbiel_nap")
      ->check(CLI::ExistingFile);
  chk->add_option("--prototype", prototype, "use the derivation prototype on polynomials up to this degree")
      ->check(CLI::Range(1, 8));
  chk->add_option("--max-length", max_length, "shuffle: longest word")->capture_default_str()->check(CLI::Range(1, 4));
  chk->add_option("--alphabet", alphabet, "shuffle: number of letters")->capture_default_str()->check(CLI::Range(1, 15));
  chk->callback([] {
    StructureReport r;
    if (swhich == "shuffle") {
      r = check_shuffle_suite(max_length, alphabet);
    } else if (swhich == "dendriform" || swhich == "zinbiel_nap") {
      if (table_path.empty() || succ_path.empty()) throw PreconditionError(swhich + " needs --table and --succ");
      const auto d = table_dendriform(parse_product_table(read_text_file(table_path)),
                                      parse_product_table(read_text_file(succ_path)));
      r = swhich == "dendriform" ? check_dendriform(d) : check_zinbiel_nap(d);
    } else {
      const Identity id = parse_identity(swhich);
      if (prototype > 0) {
        r = check_structure(id, novikov_prototype(prototype));
      } else {
        if (table_path.empty()) throw PreconditionError("--table or --prototype is required");
        r = check_structure(id, table_carrier(parse_product_table(read_text_file(table_path))));
      }
    }
    emit(to_string(r), "");
    if (!r.passed()) status = 1;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"forestcalc: exact rooted-tree Hopf algebra calculus"};
  app.require_subcommand(1);
  add_tree_commands(app);
  add_functional_commands(app);
  add_field_commands(app);
  add_check_commands(app);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return status;
}
