// dpz: command-line front-end for the del Pezzo lattice / census library.
// Prints a single JSON response on stdout; exit codes: 0 success, 2 malformed
// input, 3 precondition or applicability failure, 4 internal inconsistency.
#include <array>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dpz/adjoint.hpp"
#include "dpz/curves.hpp"
#include "dpz/ffcover.hpp"
#include "dpz/json_io.hpp"
#include "dpz/manin.hpp"
#include "dpz/surface.hpp"

namespace {

using dpz::Json;

int emit_ok(const Json& result, int exit_code = 0) {
  std::cout << Json{{"ok", true}, {"result", result}}.dump() << "\n";
  return exit_code;
}

int emit_error(const dpz::Error& e) {
  std::cout << Json{{"ok", false},
                    {"error", Json{{"code", e.code_name()}, {"message", e.what()}}}}
                   .dump()
            << "\n";
  return e.exit_code();
}

dpz::Tri tri_from_string(const std::string& s) {
  if (s == "yes") return dpz::Tri::yes;
  if (s == "no") return dpz::Tri::no;
  if (s == "unknown") return dpz::Tri::unknown;
  dpz::fail(dpz::Err::InvalidInput, "flag value must be yes, no, or unknown");
}

std::vector<dpz::FiniteField::Elem> parse_codes(const dpz::FiniteField& f,
                                                const std::string& text, size_t want) {
  std::vector<dpz::FiniteField::Elem> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      long long v = std::stoll(item);
      if (v < 0 || v >= static_cast<long long>(f.size()))
        dpz::fail(dpz::Err::InvalidInput, "element code out of range for the field");
      out.push_back(static_cast<dpz::FiniteField::Elem>(v));
    } catch (const dpz::Error&) {
      throw;
    } catch (const std::exception&) {
      dpz::fail(dpz::Err::InvalidInput, "malformed element list '" + text + "'");
    }
  }
  if (out.size() != want)
    dpz::fail(dpz::Err::InvalidInput, "expected " + std::to_string(want) + " field elements");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"del Pezzo Picard-lattice computations"};
  app.require_subcommand(1);

  // shared option storage
  std::string model_path, class_text, kind = "minus1";
  int r = 0, charp = 0, ext = 1, max_ext = 6;
  bool exceptional = false;
  std::string g2_text, g4_text, cubic_text, q4_text, pt_text, z_text;
  long long b_code = 0;
  std::string flag1 = "auto", flag2 = "auto", flag3 = "auto";

  auto* cmd_enum = app.add_subcommand("enum", "enumerate (-1)-classes or roots");
  cmd_enum->add_option("--r", r, "number of blown-up points")->required();
  cmd_enum->add_option("--kind", kind, "minus1 or roots");

  auto add_model_class = [&](CLI::App* c) {
    c->add_option("--model", model_path, "surface model JSON file")->required();
    c->add_option("--class", class_text, "divisor class, e.g. \"[3,1,1]\"")->required();
  };
  auto* cmd_nef = app.add_subcommand("nef", "test nef-ness");
  add_model_class(cmd_nef);
  auto* cmd_pseff = app.add_subcommand("pseff", "test pseudo-effectivity");
  add_model_class(cmd_pseff);
  auto* cmd_zar = app.add_subcommand("zariski", "Zariski decomposition");
  add_model_class(cmd_zar);
  auto* cmd_nefdec = app.add_subcommand("nefdec", "nef-class contraction decomposition");
  add_model_class(cmd_nefdec);
  auto* cmd_fujita = app.add_subcommand("fujita", "Fujita invariant and adjoint analysis");
  add_model_class(cmd_fujita);

  auto* cmd_breaking = app.add_subcommand("breaking", "breaking-map case table");
  cmd_breaking->add_option("--model", model_path)->required();
  cmd_breaking->add_option("--char", charp, "characteristic (0 or prime)")->required();
  cmd_breaking->add_option("--type1", flag1, "override flag: yes|no|unknown");
  cmd_breaking->add_option("--type2", flag2, "override flag: yes|no|unknown");
  cmd_breaking->add_option("--type3", flag3, "override flag: yes|no|unknown");

  auto* cmd_census = app.add_subcommand("census", "component census for a nef class");
  add_model_class(cmd_census);
  cmd_census->add_option("--char", charp)->required();
  cmd_census->add_flag("--exceptional", exceptional,
                       "flag the exceptional degree-2 char-3 surface");

  auto* cmd_path = app.add_subcommand("pathology", "pathology type flags from roots");
  cmd_path->add_option("--model", model_path)->required();
  cmd_path->add_option("--char", charp)->required();

  auto* cmd_ff = app.add_subcommand("ffcover", "finite-field coefficient criteria");
  cmd_ff->require_subcommand(1);
  auto* ff_2a = cmd_ff->add_subcommand("case2a", "cusp conditions for g2 = yz - x^2");
  auto* ff_2b = cmd_ff->add_subcommand("case2b", "cusp conditions for g2 = yz");
  auto* ff_2c = cmd_ff->add_subcommand("case2c", "cusp slope for g2 = y^2");
  auto* ff_c4 = cmd_ff->add_subcommand("c4", "cubic c4 coefficient and all-cuspidal test");
  auto* ff_flex = cmd_ff->add_subcommand("flex", "tangent-line intersection multiplicity");
  auto* ff_nonref = cmd_ff->add_subcommand("nonreflexive", "flex sampling over an extension");
  auto* ff_sing = cmd_ff->add_subcommand("singsearch", "double-cover singular point search");
  for (auto* c : {ff_2a, ff_2b, ff_2c}) {
    c->add_option("--g4", g4_text, "quartic in x,y,z")->required();
    c->add_option("--ext", ext, "coefficient field extension degree");
  }
  ff_2c->add_option("--b", b_code, "field element code b of the branch point (1:0:b)");
  ff_c4->add_option("--cubic", cubic_text, "cubic in x0,x1,x2,x3")->required();
  ff_c4->add_option("--z", z_text, "comma-separated codes z0,z1,z2,z3");
  ff_c4->add_option("--ext", ext);
  ff_flex->add_option("--q4", q4_text, "quartic in x,y,z (characteristic 3)")->required();
  ff_flex->add_option("--pt", pt_text, "comma-separated point codes x,y,z")->required();
  ff_flex->add_option("--ext", ext);
  ff_nonref->add_option("--q4", q4_text)->required();
  ff_nonref->add_option("--ext", ext, "extension degree to sample over");
  ff_sing->add_option("--g2", g2_text, "degree-2 form in x,y,z")->required();
  ff_sing->add_option("--g4", g4_text, "degree-4 form in x,y,z")->required();
  ff_sing->add_option("--max-ext", max_ext, "largest extension degree to search");
  ff_sing->add_option("--ext", ext, "coefficient field extension degree");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_enum) {
      std::vector<dpz::DivisorClass> classes;
      if (kind == "minus1")
        classes = dpz::enum_minus1_classes(r);
      else if (kind == "roots")
        classes = dpz::enum_root_classes(r);
      else
        dpz::fail(dpz::Err::InvalidInput, "--kind must be minus1 or roots");
      Json arr = Json::array();
      for (const auto& c : classes) arr.push_back(dpz::class_to_json(c));
      return emit_ok(Json{{"classes", arr}, {"count", classes.size()}});
    }
    if (*cmd_nef || *cmd_pseff || *cmd_zar || *cmd_nefdec || *cmd_fujita || *cmd_census) {
      dpz::SurfaceModel model = dpz::model_from_file(model_path);
      dpz::DivisorClass cls = dpz::class_from_string(class_text);
      if (*cmd_nef) return emit_ok(Json{{"nef", dpz::is_nef(model, cls)}});
      if (*cmd_pseff)
        return emit_ok(Json{{"pseudo_effective", dpz::is_pseudo_effective(model, cls)}});
      if (*cmd_zar) return emit_ok(dpz::zariski_to_json(dpz::zariski_decompose(model, cls)));
      if (*cmd_nefdec) return emit_ok(dpz::nefdec_to_json(dpz::nef_decompose(model, cls)));
      if (*cmd_fujita) {
        if (dpz::intersect(cls, cls) <= 0) {
          if (!dpz::is_nef(model, cls))
            dpz::fail(dpz::Err::NotNef, "fujita: class must be nef");
          return emit_ok(Json{{"a", "inf"}, {"rigid", true}, {"case", "GENERAL"}});
        }
        return emit_ok(dpz::adjoint_to_json(dpz::adjoint_analyze(model, cls)));
      }
      dpz::ComponentCensus census =
          dpz::component_census(model, charp, cls, exceptional);
      return emit_ok(dpz::census_to_json(census), census.applicable ? 0 : 3);
    }
    if (*cmd_breaking) {
      dpz::SurfaceModel model = dpz::model_from_file(model_path);
      dpz::PathologyFlags flags = dpz::pathology_from_roots(model, charp);
      if (flag1 != "auto") flags.type1 = tri_from_string(flag1);
      if (flag2 != "auto") flags.type2 = tri_from_string(flag2);
      if (flag3 != "auto") flags.type3 = tri_from_string(flag3);
      return emit_ok(Json{{"flags", dpz::flags_to_json(flags)},
                          {"cases", dpz::breaking_to_json(
                                        dpz::classify_breaking_cases(model, charp, flags))}});
    }
    if (*cmd_path) {
      dpz::SurfaceModel model = dpz::model_from_file(model_path);
      return emit_ok(dpz::flags_to_json(dpz::pathology_from_roots(model, charp)));
    }
    // ffcover
    const std::vector<std::string> plane_vars{"x", "y", "z"};
    if (*ff_2a || *ff_2b || *ff_2c) {
      const dpz::FiniteField& f = dpz::FiniteField::get(2, ext);
      dpz::FinitePoly g4 = dpz::FinitePoly::parse(f, plane_vars, g4_text);
      if (*ff_2a) return emit_ok(Json{{"conditions_hold", dpz::case2a_insep_conditions(g4)}});
      if (*ff_2b) return emit_ok(Json{{"conditions_hold", dpz::case2b_insep_conditions(g4)}});
      if (b_code < 0 || b_code >= static_cast<long long>(f.size()))
        dpz::fail(dpz::Err::InvalidInput, "--b out of range for the field");
      auto c = dpz::case2c_cusp_slope(g4, static_cast<dpz::FiniteField::Elem>(b_code));
      return emit_ok(Json{{"c", c}});
    }
    if (*ff_c4) {
      const dpz::FiniteField& f = dpz::FiniteField::get(2, ext);
      dpz::CubicSurface cubic(
          dpz::FinitePoly::parse(f, {"x0", "x1", "x2", "x3"}, cubic_text));
      Json out{{"all_cuspidal", dpz::cubic_all_cuspidal_condition(cubic)}};
      if (!z_text.empty()) {
        auto z = parse_codes(f, z_text, 4);
        out["c4"] = dpz::cubic_c4(cubic, {z[0], z[1], z[2], z[3]});
      }
      return emit_ok(out);
    }
    if (*ff_flex) {
      const dpz::FiniteField& f = dpz::FiniteField::get(3, ext);
      dpz::FinitePoly q4 = dpz::FinitePoly::parse(f, plane_vars, q4_text);
      auto pt = parse_codes(f, pt_text, 3);
      int m = dpz::tangent_flex_multiplicity(q4, {pt[0], pt[1], pt[2]});
      return emit_ok(Json{{"multiplicity", m}, {"flex", m >= 3}});
    }
    if (*ff_nonref) {
      dpz::FinitePoly q4 =
          dpz::FinitePoly::parse(dpz::FiniteField::get(3, 1), plane_vars, q4_text);
      auto res = dpz::nonreflexive_sample_test(q4, ext);
      Json out{{"verdict", dpz::flex_verdict_name(res.verdict)},
               {"min_multiplicity", res.min_multiplicity}};
      if (res.witness)
        out["witness"] = Json::array({(*res.witness)[0], (*res.witness)[1], (*res.witness)[2]});
      return emit_ok(out);
    }
    if (*ff_sing) {
      const dpz::FiniteField& f = dpz::FiniteField::get(2, ext);
      dpz::DoublePlaneCover cover(dpz::FinitePoly::parse(f, plane_vars, g2_text),
                                  dpz::FinitePoly::parse(f, plane_vars, g4_text));
      auto witness = dpz::double_cover_singular_search(cover, max_ext);
      if (!witness) return emit_ok(Json{{"found", false}});
      return emit_ok(Json{{"found", true},
                          {"chart", witness->chart},
                          {"ext", witness->ext},
                          {"point", Json::array({witness->point[0], witness->point[1],
                                                 witness->point[2], witness->point[3]})}});
    }
    dpz::fail(dpz::Err::InvalidInput, "unknown subcommand");
  } catch (const dpz::Error& e) {
    return emit_error(e);
  } catch (const std::exception& e) {
    std::cout << Json{{"ok", false},
                      {"error", Json{{"code", "InternalInconsistency"}, {"message", e.what()}}}}
                     .dump()
              << "\n";
    return 4;
  }
}
