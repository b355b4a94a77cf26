// Command-line front end.  Exit codes: 0 success (or nef), 2 usage or
// precondition error, 3 negative verdict (not nef, not Coxeter, failed
// verification).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cremona/curves.hpp"
#include "cremona/io.hpp"
#include "cremona/lattice.hpp"
#include "cremona/nef.hpp"
#include "cremona/parallel.hpp"
#include "cremona/polytopes.hpp"
#include "cremona/verify.hpp"
#include "cremona/weyl.hpp"

namespace {

using namespace cremona;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kNegative = 3;

struct RangeSpec {
  int n = 0;
  std::string range;

  std::vector<int> values() const {
    if (range.empty()) {
      require(n >= 3, "--n must be at least 3 (or use --n-range a..b)");
      return {n};
    }
    const auto dots = range.find("..");
    require(dots != std::string::npos, "--n-range must look like a..b");
    const int lo = parse_integer(range.substr(0, dots)).convert_to<int>();
    const int hi = parse_integer(range.substr(dots + 2)).convert_to<int>();
    require(lo >= 3 && lo <= hi && hi <= 64, "--n-range needs 3 <= a <= b <= 64");
    std::vector<int> out;
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
};

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return;
  std::string list;
  for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
  throw PreconditionError("format '" + format + "' is not available here (choose " + list + ")");
}

ConePolytope polytope_by_name(const std::string& name, int n) {
  if (name == "p_tilde") return build_P_tilde(n);
  if (name == "p") return build_P(n);
  if (name == "p_minus") return build_P_minus(n);
  if (name == "fundamental") return fundamental_cone(n);
  throw PreconditionError("unknown polytope '" + name + "' (p_tilde, p, p_minus, fundamental)");
}

void add_polytope_option(CLI::App* cmd, std::string& name) {
  cmd->add_option("--polytope", name, "p_tilde, p, p_minus or fundamental")
      ->check(CLI::IsMember({"p_tilde", "p", "p_minus", "fundamental"}))
      ->default_val("p");
}

void add_n_options(CLI::App* cmd, RangeSpec& spec) {
  cmd->add_option("--n", spec.n, "number of blown-up points (n >= 3)");
  cmd->add_option("--n-range", spec.range, "sweep n over a..b");
}

std::string join_integers(const std::vector<Integer>& xs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i].str();
  return out;
}

// --- reduce -----------------------------------------------------------------

int cmd_reduce(int n, const std::string& vector, const std::string& format) {
  require_format(format, {"json", "text"});
  require(n >= 3, "--n must be at least 3");
  const auto v = parse_pic_class(vector, n);
  const auto r = reduce(v);
  if (format == "json") {
    std::cout << io::to_json(r).dump(2) << "\n";
  } else {
    std::cout << "status: " << (r.in_cone() ? "in_cone" : "not_nef") << "\n";
    std::cout << "reduced: " << r.reduced << "\n";
    std::cout << "witness: " << r.witness.to_string() << "\n";
    if (r.violated) std::cout << "violated: " << *r.violated << "  (" << r.violated_description << " at stop)\n";
    std::cout << "iterations: " << r.iterations << "\n";
  }
  return r.in_cone() ? kOk : kNegative;
}

// --- curves -----------------------------------------------------------------

/// Largest degree of a (-1)-class for n <= 8; for n >= 9 there is no bound.
std::optional<std::int64_t> top_degree(int n) {
  static const std::map<int, std::int64_t> top{{3, 1}, {4, 1}, {5, 1}, {6, 2}, {7, 3}, {8, 6}};
  auto it = top.find(n);
  if (it == top.end()) return std::nullopt;
  return it->second;
}

int cmd_curves(const std::vector<int>& ns, std::int64_t max_degree, const std::string& format) {
  require_format(format, {"csv", "json", "text"});
  require(max_degree >= 0, "--max-degree must be nonnegative");
  json all = json::array();
  if (format == "csv") std::cout << "n,degree,multiplicities,coords\n";
  for (int n : ns) {
    const auto classes = enumerate_minus_one(n, max_degree);
    const auto counts = count_minus_one_by_degree(n, max_degree);
    const auto top = top_degree(n);
    const bool complete = top && max_degree >= *top;
    if (format == "csv") {
      for (const auto& c : classes)
        std::cout << n << "," << c.degree() << "," << join_integers(c.multiplicities(), " ") << ","
                  << join_integers(c.cls.vector(), " ") << "\n";
      continue;
    }
    if (format == "json") {
      json cls = json::array();
      for (const auto& c : classes) cls.push_back(io::to_json(c));
      json cnt = json::array();
      for (const auto& c : counts) cnt.push_back(io::integer_to_json(c));
      all.push_back({{"n", n},
                     {"max_degree", max_degree},
                     {"count", classes.size()},
                     {"counts_by_degree", cnt},
                     {"complete", complete},
                     {"classes", cls}});
      continue;
    }
    std::cout << "n = " << n << ", degree <= " << max_degree << "\n";
    for (const auto& c : classes)
      std::cout << "  d=" << c.degree() << "  m=(" << join_integers(c.multiplicities(), ",") << ")  class=" << c.cls
                << "\n";
    for (std::size_t d = 0; d < counts.size(); ++d) std::cout << "degree " << d << ": " << counts[d] << "\n";
    std::cout << "total: " << classes.size() << "\n";
    std::cout << (complete ? "complete: every (-1)-class has degree <= " + std::to_string(*top)
                           : std::string("not complete: classes of higher degree may exist"))
              << "\n";
  }
  if (format == "json") std::cout << (ns.size() == 1 ? all[0] : all).dump(2) << "\n";
  return kOk;
}

// --- cartan / diagram -------------------------------------------------------

int cmd_cartan(const std::vector<int>& ns, const std::string& name, const std::string& format) {
  require_format(format, {"json", "text"});
  json all = json::array();
  for (int n : ns) {
    const auto p = polytope_by_name(name, n);
    const auto c = cartan_matrix(p);
    if (format == "json") {
      all.push_back({{"n", n}, {"polytope", name}, {"cartan", io::to_json(c)}});
    } else {
      if (ns.size() > 1) std::cout << name << " n = " << n << "\n";
      std::cout << render_cartan(c);
    }
  }
  if (format == "json") std::cout << (ns.size() == 1 ? all[0] : all).dump(2) << "\n";
  return kOk;
}

int cmd_diagram(const std::vector<int>& ns, const std::string& name, const std::string& format) {
  require_format(format, {"dot", "text"});
  int status = kOk;
  for (int n : ns) {
    const auto p = polytope_by_name(name, n);
    try {
      const auto d = coxeter_diagram(p);
      std::cout << (format == "dot" ? d.to_dot(name + "_" + std::to_string(n)) : d.to_ascii());
    } catch (const NotCoxeterError& e) {
      std::cerr << e.what() << "\n";
      for (const auto& o : e.offending)
        std::cerr << "  offending pair (" << p.halfspaces[o.i].label << ", " << p.halfspaces[o.j].label
                  << "): cos2 = " << o.angle.cos2 << "\n";
      status = kNegative;
    }
  }
  return status;
}

// --- rays -------------------------------------------------------------------

int cmd_rays(const std::vector<int>& ns, const std::string& name, const std::string& format) {
  require_format(format, {"json", "text"});
  json all = json::array();
  for (int n : ns) {
    const auto p = polytope_by_name(name, n);
    const auto rays = extremal_rays(p);
    std::size_t boundary = 0;
    for (const auto& r : rays) boundary += r.position.tag == LightConePosition::Tag::Boundary;
    const bool fv = finite_volume(rays);
    if (format == "json") {
      json tags = json::array();
      for (const auto& r : rays) tags.push_back(to_string(r.position.tag));
      all.push_back({{"n", n},
                     {"polytope", name},
                     {"rays", io::to_json(rays)},
                     {"positions", tags},
                     {"count", rays.size()},
                     {"boundary", boundary},
                     {"finite_volume", fv}});
      continue;
    }
    std::cout << name << " n = " << n << "\n";
    for (const auto& r : rays) std::cout << "  " << r.generator << "  " << to_string(r.position.tag) << "\n";
    std::cout << rays.size() << " rays, " << boundary << " boundary, volume " << (fv ? "finite" : "infinite") << "\n";
  }
  if (format == "json") std::cout << (ns.size() == 1 ? all[0] : all).dump(2) << "\n";
  return kOk;
}

// --- orbit ------------------------------------------------------------------

int cmd_orbit(int n, const std::string& vector, std::optional<std::int64_t> max_degree,
              std::optional<std::size_t> max_count, const std::string& format) {
  require_format(format, {"json", "text", "csv"});
  require(n >= 3, "--n must be at least 3");
  OrbitLimit limit;
  if (max_degree) limit.max_degree = Integer(*max_degree);
  limit.max_count = max_count;
  const auto r = orbit(parse_pic_class(vector, n), limit);
  if (format == "json") {
    json el = json::array();
    for (const auto& e : r.elements) el.push_back(io::to_json(e));
    std::cout << json{{"elements", el}, {"count", r.elements.size()}, {"truncated", r.truncated},
                      {"degree_pruned", r.degree_pruned}}
                     .dump(2)
              << "\n";
  } else if (format == "csv") {
    std::cout << "coords\n";
    for (const auto& e : r.elements) std::cout << join_integers(e.vector(), " ") << "\n";
  } else {
    for (const auto& e : r.elements) std::cout << e << "\n";
    std::cout << r.elements.size() << " elements" << (r.truncated ? " (truncated by --max-count)" : "")
              << (r.degree_pruned ? " (images above --max-degree dropped)" : "") << "\n";
  }
  return kOk;
}

// --- nef-test ---------------------------------------------------------------

int cmd_nef(int n, const std::vector<std::string>& vectors, const std::string& input, const std::string& method,
            std::int64_t max_degree, const std::string& format) {
  require_format(format, {"json", "text"});
  require(n >= 3, "--n must be at least 3");
  std::vector<PicClass> classes;
  for (const auto& v : vectors) classes.push_back(parse_pic_class(v, n));
  if (!input.empty()) {
    std::ifstream in(input);
    require(static_cast<bool>(in), "cannot open " + input);
    for (std::string line; std::getline(in, line);)
      if (line.find_first_not_of(" \t\r") != std::string::npos) classes.push_back(parse_pic_class(line, n));
  }
  require(!classes.empty(), "give --vector or --input");

  std::optional<CurveTable> table;
  if (method == "curves") table = curve_table(n, max_degree);
  for (const auto& v : classes)
    if (method == "reduction") require(pairing(v, canonical_class(n)) <= 0, "K-positive side not supported (v . K > 0) for " + v.to_string());

  std::vector<NefVerdict> verdicts(classes.size());
  parallel_shards(classes.size(), worker_count(), [&](std::size_t begin, std::size_t end, std::size_t) {
    for (std::size_t i = begin; i < end; ++i)
      verdicts[i] = method == "reduction" ? is_nef_K_nonpositive(classes[i]) : curve_check(classes[i], *table);
  });

  bool all_nef = true;
  json out = json::array();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& v = verdicts[i];
    all_nef = all_nef && v.nef;
    if (format == "json") {
      auto j = io::to_json(v);
      j["class"] = io::to_json(classes[i]);
      out.push_back(j);
    } else {
      std::cout << classes[i] << ": " << (v.nef ? "nef" : "not nef") << " [" << v.method.to_string() << "] ";
      if (v.nef && v.word) std::cout << "word " << v.word->to_string() << " -> " << *v.reduced;
      if (!v.nef && v.violating) std::cout << "violates " << *v.violating << " (" << v.reason << ")";
      if (!v.conclusive()) std::cout << " necessary condition only";
      std::cout << "\n";
    }
  }
  if (format == "json") std::cout << (classes.size() == 1 ? out[0] : out).dump(2) << "\n";
  return all_nef ? kOk : kNegative;
}

// --- region-r ---------------------------------------------------------------

int cmd_region_r(const std::vector<int>& ns, const std::string& format) {
  require_format(format, {"json", "text"});
  json all = json::array();
  for (int n : ns) {
    const auto rep = verify_region_R(n);
    auto point = [](const std::array<Rational, 3>& p) {
      return "(" + p[0].str() + ", " + p[1].str() + ", " + p[2].str() + ")";
    };
    if (format == "json") {
      json rows = json::array();
      for (const auto& r : rep.rows) {
        json j{{"planes", r.planes}, {"vertex", r.is_vertex}};
        if (r.point) j["point"] = {(*r.point)[0].str(), (*r.point)[1].str(), (*r.point)[2].str()};
        if (r.f) j["f"] = r.f->str();
        rows.push_back(j);
      }
      all.push_back({{"n", n},
                     {"rows", rows},
                     {"max_f", rep.max_f.str()},
                     {"f_at_most_1", rep.f_at_most_1},
                     {"f_below_1_when_xn_negative", rep.f_below_1_when_xn_negative},
                     {"max_only_with_xn_zero", rep.max_only_with_xn_zero}});
      continue;
    }
    std::cout << "region R, n = " << n << "\n";
    for (std::size_t i = 0; i < rep.constraints.size(); ++i) std::cout << "  [" << i << "] " << rep.constraints[i].text << "\n";
    for (const auto& r : rep.rows) {
      std::cout << "  planes " << r.planes[0] << r.planes[1] << r.planes[2] << "  ";
      if (!r.point) {
        std::cout << "no single point\n";
        continue;
      }
      std::cout << point(*r.point) << "  " << (r.is_vertex ? "vertex" : "not a vertex");
      if (r.f) std::cout << "  f = " << *r.f;
      std::cout << "\n";
    }
    std::cout << "max f = " << rep.max_f << "; f <= 1 at all vertices: " << (rep.f_at_most_1 ? "yes" : "no")
              << "; f < 1 when x_n < 0: " << (rep.f_below_1_when_xn_negative ? "yes" : "no") << "\n";
  }
  if (format == "json") std::cout << (ns.size() == 1 ? all[0] : all).dump(2) << "\n";
  return kOk;
}

// --- verify -----------------------------------------------------------------

int cmd_verify(const std::string& suite, const std::string& range, std::uint64_t seed,
               const std::vector<std::string>& only, const std::string& format) {
  require_format(format, {"json", "text"});
  verify::VerifyOptions options;
  options.quick = suite == "quick";
  options.seed = seed;
  options.only = only;
  if (!range.empty()) {
    const auto ns = RangeSpec{0, range}.values();
    require(ns.front() >= 10, "--n-range for verify starts at 10");
    options.n_range = std::pair{ns.front(), ns.back()};
  }
  const auto report = verify::run(options);
  if (format == "json")
    std::cout << report.json().dump(2) << "\n";
  else
    std::cout << report.text();
  return report.all_passed() ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Cremona action on Z^{1,n}: reduction into fundamental cones, (-1)-classes, Coxeter data of the cones.\n"
      "All arithmetic is exact.  Only integer classes are accepted, so irrational rays of Nef on the light cone\n"
      "are out of scope; nef decisions are exact on the side v.K <= 0 and K-positive input is rejected."};
  app.require_subcommand(1);

  std::string format = "text";
  int result = kOk;

  int n = 0;
  RangeSpec spec;
  std::string vector, polytope = "p", suite = "quick", method = "reduction", input;
  std::vector<std::string> vectors, only;
  std::int64_t max_degree = 6;
  std::int64_t nef_degree = 8;
  std::optional<std::int64_t> orbit_degree;
  std::optional<std::size_t> orbit_count;
  std::uint64_t seed = 20240917;

  auto* reduce_cmd = app.add_subcommand("reduce", "reduce a K-nonpositive class into the fundamental cone");
  reduce_cmd->add_option("--n", n, "number of points")->required();
  reduce_cmd->add_option("--vector", vector, "x0,x1,...,xn")->required();
  reduce_cmd->add_option("--format", format, "text or json");
  reduce_cmd->callback([&] { result = cmd_reduce(n, vector, format); });

  auto* curves_cmd = app.add_subcommand("curves", "enumerate (-1)-classes up to a degree");
  add_n_options(curves_cmd, spec);
  curves_cmd->add_option("--max-degree", max_degree, "largest degree")->default_val(6);
  curves_cmd->add_option("--format", format, "text, csv or json");
  curves_cmd->callback([&] { result = cmd_curves(spec.values(), max_degree, format); });

  auto* cartan_cmd = app.add_subcommand("cartan", "Cartan matrix of a cone polytope");
  add_n_options(cartan_cmd, spec);
  add_polytope_option(cartan_cmd, polytope);
  cartan_cmd->add_option("--format", format, "text or json");
  cartan_cmd->callback([&] { result = cmd_cartan(spec.values(), polytope, format); });

  auto* diagram_cmd = app.add_subcommand("diagram", "Coxeter diagram (exit 3 if the polytope is not Coxeter)");
  add_n_options(diagram_cmd, spec);
  add_polytope_option(diagram_cmd, polytope);
  diagram_cmd->add_option("--format", format, "text or dot");
  diagram_cmd->callback([&] { result = cmd_diagram(spec.values(), polytope, format); });

  auto* rays_cmd = app.add_subcommand("rays", "extremal rays with light-cone positions");
  add_n_options(rays_cmd, spec);
  add_polytope_option(rays_cmd, polytope);
  rays_cmd->add_option("--format", format, "text or json");
  rays_cmd->callback([&] { result = cmd_rays(spec.values(), polytope, format); });

  auto* orbit_cmd = app.add_subcommand("orbit", "orbit of a class under all generators, with a limit");
  orbit_cmd->add_option("--n", n, "number of points")->required();
  orbit_cmd->add_option("--vector", vector, "x0,x1,...,xn")->required();
  orbit_cmd->add_option("--max-degree", orbit_degree, "drop images of larger degree");
  orbit_cmd->add_option("--max-count", orbit_count, "stop after this many elements");
  orbit_cmd->add_option("--format", format, "text, csv or json");
  orbit_cmd->callback([&] {
    require(orbit_degree || orbit_count, "orbit needs --max-degree or --max-count");
    result = cmd_orbit(n, vector, orbit_degree, orbit_count, format);
  });

  auto* nef_cmd = app.add_subcommand("nef-test", "nef test: exact reduction (v.K <= 0) or bounded curve check");
  nef_cmd->add_option("--n", n, "number of points")->required();
  nef_cmd->add_option("--vector", vectors, "x0,x1,...,xn (repeatable)");
  nef_cmd->add_option("--input", input, "file with one vector per line");
  nef_cmd->add_option("--method", method, "reduction or curves")
      ->check(CLI::IsMember({"reduction", "curves"}))
      ->default_val("reduction");
  nef_cmd->add_option("--max-degree", nef_degree, "degree bound for --method curves")->default_val(8);
  nef_cmd->add_option("--format", format, "text or json");
  nef_cmd->callback([&] { result = cmd_nef(n, vectors, input, method, nef_degree, format); });

  auto* region_cmd = app.add_subcommand("region-r", "vertices of the auxiliary region R and the values of f");
  add_n_options(region_cmd, spec);
  region_cmd->add_option("--format", format, "text or json");
  region_cmd->callback([&] { result = cmd_region_r(spec.values(), format); });

  auto* verify_cmd = app.add_subcommand("verify", "run the acceptance checks");
  verify_cmd->add_option("--suite", suite, "paper (full) or quick")
      ->check(CLI::IsMember({"paper", "quick"}))
      ->default_val("quick");
  verify_cmd->add_option("--n-range", spec.range, "n sweep for the vertex-family check, a..b");
  verify_cmd->add_option("--seed", seed, "seed of the randomized checks");
  verify_cmd->add_option("--only", only, "run only these check ids (e.g. 04, 07c)");
  verify_cmd->add_option("--format", format, "text or json");
  verify_cmd->callback([&] { result = cmd_verify(suite, spec.range, seed, only, format); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return result;
}
