#include "fourgen/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fourgen/bounds.hpp"
#include "fourgen/codes.hpp"
#include "fourgen/constructions.hpp"
#include "fourgen/curves.hpp"
#include "fourgen/genset.hpp"
#include "fourgen/io.hpp"
#include "fourgen/search.hpp"

namespace fourgen::cli {

namespace {

using nlohmann::json;

void emit_pointset(const PointSet& x, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) save_pointset(x, out);
  else save_pointset_file(x, out_path);
}

int do_construct(const std::string& id, int n, uint32_t q, uint32_t d, uint32_t alpha, uint32_t h,
                 const std::string& out_path, std::ostream& out) {
  PointSet x;
  if (id == "frame") x = frame(n, q);
  else if (id == "elliptic_quadric") x = elliptic_quadric(q);
  else if (id == "theta0") x = cyclic_theta0(d, q);
  else if (id == "htw_y") x = htw_y(d);
  else if (id == "v_alpha") x = v_alpha(d, alpha);
  else if (id == "twisted_cubic") x = twisted_cubic(q, h);
  else if (id == "pg38") x = pg38_seven_set();
  else if (id == "triple_cubic") x = triple_cubic(q);
  else if (id == "pg55" || id == "pg516" || id == "pg62") x = named_example(id);
  else if (id == "set_o") x = set_O(q);
  else if (id == "abb_arc") x = abb_arc(q);
  else if (id == "golay23") x = golay_cap23();
  else if (id == "frame_shadow") x = frame_secant_shadow(d);
  else throw CLI::ValidationError("unknown construction id: " + id);
  emit_pointset(x, out_path, out);
  return 0;
}

json bounds_json(int n, uint32_t q) {
  json j;
  auto up = m3_upper(n, q);
  j["m3_upper"] = up.integer_bound;
  j["m3_upper_real"] = up.real_value;
  j["m3_equality_case"] = up.equality_case;
  auto low = t3_lower(n, q);
  j["t3_lower"] = low.effective.integer_bound;
  j["t3_lower_real"] = low.effective.real_value;
  j["t3_lower_general"] = low.general.integer_bound;
  if (low.simplified) j["t3_lower_simplified"] = low.simplified->integer_bound;
  auto ag = ag_upper(n, q);
  j["ag_upper"] = ag.integer_bound;
  j["reference"] = json::array();
  for (const auto& r : reference_values(n, q))
    j["reference"].push_back({{"name", r.name}, {"exact", r.exact}, {"value", r.value}});
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"4-general sets in PG(n,q): constructions, verification, bounds and codes"};
  app.set_help_flag("--help", "print usage");  // keep -h free for construct --h
  app.require_subcommand(1);

  // construct
  auto* c_cmd = app.add_subcommand("construct", "emit a named point-set construction");
  std::string c_id, c_out;
  int c_n = 3;
  uint32_t c_q = 2, c_d = 2, c_alpha = 1, c_h = 1;
  c_cmd->add_option("id", c_id, "construction id")->required();
  c_cmd->add_option("--n", c_n, "projective dimension");
  c_cmd->add_option("--q", c_q, "field size");
  c_cmd->add_option("--d", c_d, "tower degree parameter");
  c_cmd->add_option("--alpha", c_alpha, "field element parameter");
  c_cmd->add_option("--h", c_h, "Frobenius exponent parameter");
  c_cmd->add_option("--out", c_out, "write to file instead of stdout");

  // verify / complete / aut / code
  std::string v_file;
  bool v_complete = false, v_json = false;
  auto* v_cmd = app.add_subcommand("verify", "check the 4-general property");
  v_cmd->add_option("file", v_file, "point-set file")->required();
  v_cmd->add_flag("--complete", v_complete, "also run the completeness sweep");
  v_cmd->add_flag("--json", v_json, "machine-readable report");

  std::string comp_file;
  bool comp_json = false;
  auto* comp_cmd = app.add_subcommand("complete", "verify completeness (coverage sweep)");
  comp_cmd->add_option("file", comp_file, "point-set file")->required();
  comp_cmd->add_flag("--json", comp_json, "machine-readable report");

  std::string a_file;
  bool a_semilinear = false, a_json = false;
  auto* a_cmd = app.add_subcommand("aut", "setwise stabilizer order");
  a_cmd->add_option("file", a_file, "point-set file")->required();
  a_cmd->add_flag("--semilinear", a_semilinear, "stabilizer in PGammaL instead of PGL");
  a_cmd->add_flag("--json", a_json, "machine-readable report");

  std::string k_file;
  bool k_json = false;
  auto* k_cmd = app.add_subcommand("code", "linear-code parameters of the point set");
  k_cmd->add_option("file", k_file, "point-set file")->required();
  k_cmd->add_flag("--json", k_json, "machine-readable report");

  // bounds
  int b_n = 3;
  uint32_t b_q = 2;
  bool b_json = false;
  auto* b_cmd = app.add_subcommand("bounds", "closed-form bounds at (n, q)");
  b_cmd->add_option("--n", b_n, "projective dimension")->required();
  b_cmd->add_option("--q", b_q, "field size")->required();
  b_cmd->add_flag("--json", b_json, "machine-readable report");

  // curves
  auto* cv_cmd = app.add_subcommand("curves", "plane-curve verifications");
  cv_cmd->require_subcommand(1);
  uint32_t cv_q = 4, cv_gamma = 2, cv_trials = 100;
  std::optional<uint64_t> cv_seed;
  auto* cv1 = cv_cmd->add_subcommand("cubic1", "nodal cubic point count");
  cv1->add_option("--q", cv_q, "field size")->required();
  auto* cv2 = cv_cmd->add_subcommand("cubic2", "smooth cubic point count");
  cv2->add_option("--q", cv_q, "field size")->required();
  cv2->add_option("--gamma", cv_gamma, "curve parameter, not 0 or 1")->required();
  auto* cvn = cv_cmd->add_subcommand("net", "Hermitian net/pencil base-locus probe");
  cvn->add_option("--q", cv_q, "field size")->required();
  cvn->add_option("--trials", cv_trials, "number of sampled configurations");
  cvn->add_option("--seed", cv_seed, "random seed (required)");

  // search
  auto* s_cmd = app.add_subcommand("search", "completion and classification");
  s_cmd->require_subcommand(1);
  int s_n = 3;
  uint32_t s_q = 2;
  double s_budget = 60.0;
  std::string s_file, s_order = "lex", s_out;
  std::optional<uint64_t> s_seed;
  bool s_json = false;
  auto* s_classify = s_cmd->add_subcommand("classify", "complete sets up to equivalence");
  s_classify->add_option("--n", s_n)->required();
  s_classify->add_option("--q", s_q)->required();
  s_classify->add_flag("--json", s_json);
  auto* s_max = s_cmd->add_subcommand("max", "largest 4-general set size");
  s_max->add_option("--n", s_n)->required();
  s_max->add_option("--q", s_q)->required();
  s_max->add_option("--budget-sec", s_budget);
  s_max->add_flag("--json", s_json);
  auto* s_complete = s_cmd->add_subcommand("complete", "greedy completion of a point set");
  s_complete->add_option("file", s_file)->required();
  s_complete->add_option("--order", s_order)->check(CLI::IsMember({"lex", "random"}));
  s_complete->add_option("--seed", s_seed);
  s_complete->add_option("--out", s_out);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (*c_cmd) return do_construct(c_id, c_n, c_q, c_d, c_alpha, c_h, c_out, out);

    if (*v_cmd || *comp_cmd) {
      bool want_complete = *comp_cmd || v_complete;
      bool want_json = *comp_cmd ? comp_json : v_json;
      PointSet x = load_pointset_file(*comp_cmd ? comp_file : v_file);
      VerifyReport rep = want_complete ? verify_complete(x) : verify_4general(x);
      if (want_json) out << verify_report_json(rep) << "\n";
      else {
        out << "size " << rep.size << ", spans " << (rep.spans_space ? "yes" : "no") << ", cap "
            << (rep.is_cap ? "yes" : "no") << ", 4-general " << (rep.is_4general ? "yes" : "no");
        if (rep.is_complete) out << ", complete " << (*rep.is_complete ? "yes" : "no");
        if (rep.covered_count) out << ", covered " << *rep.covered_count;
        out << "\n";
        for (const auto& v : rep.violations) {
          out << "witness " << v.kind << ":";
          for (auto pt : v.points) out << " " << pt;
          out << "\n";
        }
      }
      bool ok = want_complete ? rep.is_4general && rep.is_complete.value_or(false)
                              : rep.is_4general;
      return ok ? 0 : 1;
    }

    if (*a_cmd) {
      PointSet x = load_pointset_file(a_file);
      auto res = aut_order(x, a_semilinear);
      if (!res.computable) {
        err << "not computable: " << res.method << "\n";
        return 2;
      }
      if (a_json) out << json{{"aut", res.order}, {"method", res.method}}.dump(2) << "\n";
      else out << res.order << "\n";
      return 0;
    }

    if (*k_cmd) {
      PointSet x = load_pointset_file(k_file);
      auto cp = code_params(x);
      if (k_json) out << code_params_json(cp) << "\n";
      else
        out << "[" << cp.length << ", " << cp.dimension << ", " << cp.min_distance << "]_" << cp.q
            << " covering radius " << cp.covering_radius
            << (cp.exception.empty() ? "" : " (" + cp.exception + ")") << "\n";
      return 0;
    }

    if (*b_cmd) {
      json j = bounds_json(b_n, b_q);
      if (b_json) out << j.dump(2) << "\n";
      else {
        out << "m3_upper = " << j["m3_upper"] << (j["m3_equality_case"].get<bool>() ? " (attained)" : "")
            << "\n";
        out << "t3_lower threshold = " << j["t3_lower"] << "\n";
        out << "ag_upper = " << j["ag_upper"] << "\n";
        for (const auto& r : j["reference"])
          out << r["name"].get<std::string>() << (r["exact"].get<bool>() ? " = " : " >= ")
              << r["value"] << "\n";
      }
      return 0;
    }

    if (*cv_cmd) {
      if (*cv1) {
        out << cubic1_count(cv_q) << "\n";
        return 0;
      }
      if (*cv2) {
        out << cubic2_count(cv_q, cv_gamma) << "\n";
        return 0;
      }
      if (!cv_seed) {
        err << "curves net requires --seed\n";
        return 2;
      }
      auto rep = hermitian_net_probe(cv_q, cv_trials, *cv_seed);
      json j{{"q", rep.q},
             {"seed", rep.seed},
             {"nets", rep.nets_probed},
             {"empty_base_loci", rep.empty_base_loci},
             {"pencil_sizes", rep.pencil_base_sizes},
             {"pencil_sizes_admissible", rep.pencil_sizes_admissible},
             {"pencils_enough_nondegenerate", rep.pencils_have_enough_nondegenerate}};
      out << j.dump(2) << "\n";
      return rep.empty_base_loci == 0 && rep.pencil_sizes_admissible ? 0 : 1;
    }

    if (*s_cmd) {
      if (*s_classify) {
        auto res = classify_complete(s_n, s_q);
        json j;
        j["pgl"] = res.pgl;
        j["consistency"] = res.consistency_ok;
        j["classes"] = json::array();
        for (const auto& c : res.classes)
          j["classes"].push_back(
              {{"size", c.size}, {"aut", c.aut}, {"labeled_copies", c.labeled_copies}});
        if (s_json) out << j.dump(2) << "\n";
        else
          for (const auto& c : res.classes)
            out << "size " << c.size << "  aut " << c.aut << "  labeled copies "
                << c.labeled_copies << "\n";
        return res.consistency_ok ? 0 : 1;
      }
      if (*s_max) {
        auto res = max_size(s_n, s_q, s_budget);
        if (s_json) {
          json j{{"max", res.max_size}, {"proven", res.proven}, {"nodes", res.nodes}};
          out << j.dump(2) << "\n";
        } else {
          out << res.max_size << (res.proven ? "" : " (budget exhausted: lower bound only)") << "\n";
        }
        return res.proven ? 0 : 1;
      }
      // greedy completion
      PointSet x = load_pointset_file(s_file);
      CandidateOrder order = s_order == "random" ? CandidateOrder::Random : CandidateOrder::Lex;
      if (order == CandidateOrder::Random && !s_seed) {
        err << "search complete --order random requires --seed\n";
        return 2;
      }
      auto done = greedy_complete(x, order, s_seed.value_or(0));
      emit_pointset(done, s_out, out);
      return 0;
    }
  } catch (const PointSetParseError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "usage/scope error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace fourgen::cli
