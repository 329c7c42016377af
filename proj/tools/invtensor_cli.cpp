#include <cmath>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "invtensor/io.hpp"
#include "invtensor/kernels.hpp"
#include "invtensor/search.hpp"
#include "suite/suite.hpp"

using namespace invtensor;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInvalid = 2;

struct Global {
  double tol = kDefaultTol;
  std::uint64_t seed = 7;
  std::uint64_t budget = kDefaultBudget;
  RunOptions run() const { return {tol, budget}; }
};

void emit(const Json& j, const std::string& out) {
  if (out.empty())
    std::cout << j.dump(1) << '\n';
  else
    write_json_file(out, j);
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) {
      try {
        out.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw InvalidInput("not an integer list: '" + s + "'");
      }
    }
  return out;
}

std::vector<int> operator_sides(const GlobalTensor& t, const Json& j) {
  if (j.contains("sides")) return j.at("sides").get<std::vector<int>>();
  std::vector<int> sides;
  for (int d : t.dims) {
    const int s = static_cast<int>(std::lround(std::sqrt(static_cast<double>(d))));
    if (s * s != d) throw InvalidInput("operator tensor needs square dims or a \"sides\" field");
    sides.push_back(s);
  }
  return sides;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariant tensor decompositions on weighted simplicial complexes"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--tol", g.tol, "Numerical tolerance")->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for every random choice")->capture_default_str();
  app.add_option("--budget", g.budget, "Work budget in multiply-adds")->capture_default_str();

  std::string in, in2, out, mode, target, action_path, subgroup, against, coeffs_path, group_path, from_gens, to;
  int rank = 1, restarts = 32, iters = 400, n = 2;
  std::vector<int> criteria;
  std::function<int()> run;

  auto* validate = app.add_subcommand("validate", "Check the axioms of a complex");
  validate->add_option("complex", in)->required();
  validate->callback([&] {
    run = [&] {
      const auto rep = validate_wsc(wsc_from_json(read_json_file(in)));
      emit(report_to_json(rep), "");
      return rep.ok() ? kOk : kFailed;
    };
  });

  auto* validate_act = app.add_subcommand("validate-action", "Check a group action on a complex");
  validate_act->add_option("action", in)->required();
  validate_act->callback([&] {
    run = [&] {
      const WscAction a = action_from_json(read_json_file(in));
      auto rep = validate_wsc(a.complex);
      rep.merge(validate_action(a));
      emit(report_to_json(rep), "");
      return rep.ok() ? kOk : kFailed;
    };
  });

  auto* classify = app.add_subcommand("classify", "Free / blending / strongly blending");
  classify->add_option("action", in)->required();
  classify->callback([&] {
    run = [&] {
      const WscAction a = action_from_json(read_json_file(in));
      require_valid(a);
      emit({{"free", is_free(a)}, {"blending", is_blending(a)}, {"strongly_blending", is_strongly_blending(a)}}, "");
      return kOk;
    };
  });

  auto* refine = app.add_subcommand("refine-free", "Free refinement of an action");
  refine->add_option("action", in)->required();
  refine->add_option("-o,--output", out);
  refine->callback([&] {
    run = [&] {
      const WscAction a = action_from_json(read_json_file(in));
      require_valid(a);
      emit(action_to_json(free_refinement(a)), out);
      return kOk;
    };
  });

  auto* seed = app.add_subcommand("seed", "Basis-expansion decomposition of a tensor");
  seed->add_option("tensor", in)->required();
  seed->add_option("--complex", target)->required();
  seed->add_option("-o,--output", out);
  seed->callback([&] {
    run = [&] {
      const GlobalTensor v = tensor_from_json(read_json_file(in));
      const Wsc w = wsc_from_json(read_json_file(target));
      require_valid(w);
      emit(decomposition_to_json(from_elementary(w, basis_expansion(v))), out);
      return kOk;
    };
  });

  auto* inv = app.add_subcommand("invariantize", "Invariant decomposition from a trivial-action one");
  inv->add_option("decomposition", in)->required();
  inv->add_option("--action", action_path)->required();
  inv->add_option("--mode", mode)->required()->check(CLI::IsMember({"free", "blending", "strong"}));
  inv->add_option("--coefficients", coeffs_path, "Indicator coefficients (default: built in)");
  inv->add_option("-o,--output", out);
  inv->callback([&] {
    run = [&] {
      const Decomposition d = decomposition_from_json(read_json_file(in));
      const WscAction a = action_from_json(read_json_file(action_path));
      const IndicatorCoefficients c = coeffs_path.empty() ? indicator_coefficients(a.complex.n())
                                                          : coefficients_from_json(read_json_file(coeffs_path));
      Decomposition res;
      if (mode == "free") {
        res = invariantize_free(a, d, g.run());
      } else if (mode == "blending") {
        if (d.action.order() != 1) throw PreconditionFailed("input decomposition must use the trivial action");
        res = invariantize_blending(a, basis_expansion(contract(d, g.run())), c, g.run());
      } else {
        res = invariantize_strong_blending(a, d, c, g.run());
      }
      emit(decomposition_to_json(res), out);
      return kOk;
    };
  });

  auto* cg = app.add_subcommand("change-group", "Lift a subgroup decomposition to the whole group");
  cg->add_option("decomposition", in)->required();
  cg->add_option("--action", action_path, "Action of the whole group")->required();
  cg->add_option("--subgroup", subgroup, "Comma-separated element ids of H")->required();
  cg->add_option("-o,--output", out);
  cg->callback([&] {
    run = [&] {
      const Decomposition d = decomposition_from_json(read_json_file(in));
      const WscAction a = action_from_json(read_json_file(action_path));
      emit(decomposition_to_json(change_group(a, parse_ints(subgroup), d, g.run())), out);
      return kOk;
    };
  });

  auto* cc = app.add_subcommand("change-complex", "Move a decomposition to another complex");
  cc->add_option("decomposition", in)->required();
  cc->add_option("--target", target, "Target complex");
  cc->add_option("--mode", mode, "constant | power:m | cayley:S")->required();
  cc->add_option("--group", group_path, "Group table (cayley mode)");
  cc->add_option("--from", from_gens, "Generators of the source Cayley complex (cayley mode)");
  cc->add_option("-o,--output", out);
  cc->callback([&] {
    run = [&] {
      const Decomposition d = decomposition_from_json(read_json_file(in));
      Decomposition res;
      if (mode == "constant") {
        if (target.empty()) throw InvalidInput("constant mode needs --target");
        res = change_complex_constant(d, wsc_from_json(read_json_file(target)));
      } else if (mode.rfind("power:", 0) == 0) {
        const auto m = parse_ints(mode.substr(6));
        if (m.size() != 1 || m[0] < 1) throw InvalidInput("power mode needs a positive multiplicity");
        PowerDirection dir = PowerDirection::to_multiple;
        if (!target.empty()) {
          const Wsc t = wsc_from_json(read_json_file(target));
          if (t == unscale_weights(d.complex(), static_cast<std::uint64_t>(m[0])))
            dir = PowerDirection::from_multiple;
          else if (!(t == scale_weights(d.complex(), static_cast<std::uint64_t>(m[0]))))
            throw InvalidInput("target is neither the scaled nor the unscaled source complex");
        }
        res = change_complex_power(d, m[0], dir);
      } else if (mode.rfind("cayley:", 0) == 0) {
        if (group_path.empty() || from_gens.empty()) throw InvalidInput("cayley mode needs --group and --from");
        const FiniteGroup grp = group_from_json(read_json_file(group_path));
        res = change_complex_cayley(d, grp, parse_ints(from_gens), parse_ints(mode.substr(7)));
        if (!target.empty() && !(wsc_from_json(read_json_file(target)) == res.complex()))
          throw InvalidInput("target is not the Cayley complex of the given generators");
      } else {
        throw InvalidInput("unknown mode '" + mode + "'");
      }
      emit(decomposition_to_json(res), out);
      return kOk;
    };
  });

  auto* purify = app.add_subcommand("purify", "Purification of a separable decomposition");
  purify->add_option("decomposition", in)->required();
  purify->add_option("-o,--output", out);
  purify->callback([&] {
    run = [&] {
      emit(decomposition_to_json(purify_separable(decomposition_from_json(read_json_file(in)), g.run())), out);
      return kOk;
    };
  });

  auto* sqp = app.add_subcommand("sqrt-purify", "Square-root purification of an invariant psd operator");
  sqp->add_option("sigma", in)->required();
  sqp->add_option("action", in2)->required();
  sqp->add_option("-o,--output", out);
  sqp->callback([&] {
    run = [&] {
      const Json j = read_json_file(in);
      const GlobalTensor sigma = tensor_from_json(j);
      const WscAction a = action_from_json(read_json_file(in2));
      emit(decomposition_to_json(sqrt_purification(a, sigma, operator_sides(sigma, j), g.run())), out);
      return kOk;
    };
  });

  auto* nn = app.add_subcommand("nn", "Nonnegative decompositions");
  nn->require_subcommand(1);
  auto* convert = nn->add_subcommand("convert", "Nonnegative decomposition to separable or psd form");
  convert->add_option("decomposition", in)->required();
  convert->add_option("--to", to)->required()->check(CLI::IsMember({"sep", "psd"}));
  convert->add_option("-o,--output", out);
  convert->callback([&] {
    run = [&] {
      const Decomposition d = decomposition_from_json(read_json_file(in));
      const Decomposition sep = nn_to_sep(d, g.tol);
      if (to == "sep")
        emit(decomposition_to_json(sep), out);
      else
        emit(psd_family_to_json(purification_to_psd_decomp(purify_separable(sep, g.run()))), out);
      return kOk;
    };
  });
  auto* evaluate = nn->add_subcommand("evaluate", "Tensor of a psd family");
  evaluate->add_option("family", in)->required();
  evaluate->add_option("-o,--output", out);
  evaluate->callback([&] {
    run = [&] {
      const PsdFamily f = psd_family_from_json(read_json_file(in));
      const auto rep = validate_psd_family(f);
      if (!rep.ok()) throw PreconditionFailed("psd family invalid: " + rep.violations.front().kind);
      emit(tensor_to_json(evaluate_psd_decomp(f, g.run())), out);
      return kOk;
    };
  });

  auto* verify_cmd = app.add_subcommand("verify", "Check condition (b) and the contraction");
  verify_cmd->add_option("decomposition", in)->required();
  verify_cmd->add_option("--against", against)->required();
  verify_cmd->callback([&] {
    run = [&] {
      const Decomposition d = decomposition_from_json(read_json_file(in));
      const GlobalTensor v = tensor_from_json(read_json_file(against));
      const auto cond = check_condition_b(d, g.tol);
      double err = -1.0;
      if (v.dims == d.dims) err = max_abs_diff(contract(d, g.run()), v);
      const bool ok = cond.ok() && err >= 0.0 && err <= g.tol;
      emit({{"verified", ok}, {"condition_b", report_to_json(cond)}, {"max_error", err}, {"r", d.r}}, "");
      return ok ? kOk : kFailed;
    };
  });

  auto* contract_cmd = app.add_subcommand("contract", "Global tensor of a decomposition");
  contract_cmd->add_option("decomposition", in)->required();
  contract_cmd->add_option("-o,--output", out);
  contract_cmd->callback([&] {
    run = [&] {
      emit(tensor_to_json(contract(decomposition_from_json(read_json_file(in)), g.run())), out);
      return kOk;
    };
  });

  auto* search = app.add_subcommand("search", "Numeric search for a decomposition of a given size");
  search->add_option("tensor", in)->required();
  search->add_option("--action", action_path)->required();
  search->add_option("--rank", rank)->required();
  search->add_option("--restarts", restarts)->capture_default_str();
  search->add_option("--iters", iters)->capture_default_str();
  search->add_option("-o,--output", out);
  search->callback([&] {
    run = [&] {
      const GlobalTensor v = tensor_from_json(read_json_file(in));
      const WscAction a = action_from_json(read_json_file(action_path));
      const auto res = numeric_rank_search(a, v, rank, {restarts, iters, g.tol, g.seed, g.budget});
      Json j = {{"found", res.decomposition.has_value()},
                {"best_residual", res.best_residual},
                {"best_restart", res.best_restart},
                {"restarts_run", res.restarts_run}};
      if (res.decomposition) j["decomposition"] = decomposition_to_json(*res.decomposition);
      emit(j, out);
      return res.decomposition ? kOk : kFailed;
    };
  });

  auto* isearch = app.add_subcommand("indicator-search", "Search for indicator coefficients");
  isearch->add_option("--n", n)->required();
  isearch->add_option("--rank", rank)->required();
  isearch->add_option("--restarts", restarts)->capture_default_str();
  isearch->add_option("--iters", iters)->capture_default_str();
  isearch->add_option("-o,--output", out);
  isearch->callback([&] {
    run = [&] {
      const auto res = indicator_search(n, rank, {restarts, iters, g.tol, g.seed, g.budget});
      Json j = {{"found", res.coefficients.has_value()},
                {"best_residual", res.best_residual},
                {"best_restart", res.best_restart},
                {"restarts_run", res.restarts_run}};
      if (res.coefficients) j["coefficients"] = coefficients_to_json(*res.coefficients);
      emit(j, out);
      return res.coefficients ? kOk : kFailed;
    };
  });

  auto* erank = app.add_subcommand("edge-rank", "Matrix rank of a two-axis tensor");
  erank->add_option("tensor", in)->required();
  erank->callback([&] {
    run = [&] {
      emit({{"rank", exact_edge_rank(tensor_from_json(read_json_file(in)), g.tol)}}, "");
      return kOk;
    };
  });

  bool with_action = false;
  auto* standard = app.add_subcommand("standard", "Emit a standard complex or its standard action");
  standard->add_option("family", mode)
      ->required()
      ->check(CLI::IsMember({"simplex", "complete", "line", "circle", "double_edge"}));
  standard->add_option("--n", n, "n, or the vertex count for circle")->capture_default_str();
  standard->add_flag("--action", with_action,
                     "Symmetric group on simplex/complete, reflection on line, rotation on circle, swap on "
                     "double_edge");
  standard->add_option("-o,--output", out);
  standard->callback([&] {
    run = [&] {
      if (!with_action) {
        const ComplexFamily fam = mode == "simplex"    ? ComplexFamily::simplex
                                  : mode == "complete" ? ComplexFamily::complete
                                  : mode == "line"     ? ComplexFamily::line
                                  : mode == "circle"   ? ComplexFamily::circle
                                                       : ComplexFamily::double_edge;
        ComplexParams p;
        p.n = n;
        emit(wsc_to_json(standard_complex(fam, p)), out);
        return kOk;
      }
      const WscAction a = mode == "simplex"    ? symmetric_simplex_action(n)
                          : mode == "complete" ? symmetric_complete_action(n)
                          : mode == "line"     ? reflection_line_action(n)
                          : mode == "circle"   ? rotation_circle_action(n)
                                               : double_edge_action(true);
      emit(action_to_json(a), out);
      return kOk;
    };
  });

  auto* suite_cmd = app.add_subcommand("suite", "Run the acceptance matrix");
  suite_cmd->add_option("--criterion", criteria, "Only these criteria (repeatable)");
  suite_cmd->add_option("-o,--output", out);
  suite_cmd->callback([&] {
    run = [&] {
      const auto results = suite::run_suite(g.seed, criteria);
      bool all = true;
      for (const auto& r : results) {
        std::cerr << suite::summary_line(r) << '\n';
        all = all && r.passed;
      }
      emit(suite::report(results, g.seed), out);
      return all ? kOk : kFailed;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }
  try {
    return run ? run() : kInvalid;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
  } catch (const PreconditionFailed& e) {
    std::cerr << "precondition failed: " << e.what() << '\n';
  } catch (const Error& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
  }
  return kInvalid;
}
