// cfk: involutive invariants of the pretzel knots P(-2,m,n).

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "cfk/error.hpp"
#include "cfk/examples.hpp"
#include "cfk/involutive.hpp"
#include "cfk/pretzel.hpp"
#include "cfk/render.hpp"
#include "cfk/report.hpp"

namespace {

using namespace cfk;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

void setup_logging() {
  auto logger = spdlog::stderr_color_mt("cfk");
  logger->set_pattern("[%l] %v");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  if (const char* env = std::getenv("CFK_LOG")) {
    const auto level = spdlog::level::from_str(env);
    // from_str maps unknown names to off; only accept real level names.
    if (level != spdlog::level::off || std::string_view(env) == "off") {
      spdlog::set_level(level);
    } else {
      spdlog::warn("ignoring CFK_LOG={}", env);
    }
  }
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw InvalidArgument("cannot open " + path);
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string triple(const pretzel::Triple& t) {
  std::ostringstream s;
  s << "(" << t.v0 << ", " << t.v0_lower << ", " << t.v0_upper << ")";
  return s.str();
}

std::string knot_name(const pretzel::Params& p, bool mirrored) {
  std::ostringstream s;
  s << (mirrored ? "mirror of " : "") << "P(-2," << p.m << "," << p.n << ")";
  return s.str();
}

struct KnotOptions {
  int m = 0;
  int n = 0;
  bool mirror = false;
};

void add_knot_options(CLI::App* cmd, KnotOptions& k) {
  cmd->add_option("-m", k.m, "first odd parameter (m >= n)")->required();
  cmd->add_option("-n", k.n, "second odd parameter (n >= 3)")->required();
  cmd->add_flag("--mirror", k.mirror, "use the mirror knot");
}

// invariants

int cmd_invariants(const KnotOptions& k, bool full, const std::string& format, const std::string& out_path) {
  const auto p = pretzel::Params::make(k.m, k.n);
  spdlog::info("computing {}", knot_name(p, k.mirror));
  const auto r = pretzel::compute_invariants(p, k.mirror, full);
  const auto checks = pretzel::run_checks(r);
  Output out(out_path);
  auto& os = out.stream();
  if (format == "json") {
    os << pretzel::to_json(pretzel::make_record(r, checks)).dump(2) << "\n";
  } else {
    os << knot_name(p, k.mirror) << "  family " << pretzel::to_string(r.spec.family) << "  n(K) = " << r.spec.n_of_k
       << "  genus " << p.genus() << "\n";
    os << (full ? "full complex, " : "model complex, ") << r.generators << " generators\n";
    os << "H(A0-)  = " << describe(r.a0_homology) << "\n";
    os << "H(AI0-) = " << describe(r.cone.homology) << "\n";
    os << "                 (V0, V0_lower, V0_upper)\n";
    os << "computed         " << triple(r.computed) << "\n";
    os << "closed form      " << triple(r.expected) << "\n";
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    os << "checks           hfk " << yn(checks.hfk_match) << "  alexander " << yn(checks.alexander_match) << "  genus "
       << yn(checks.genus_match) << "  count " << yn(checks.count_match) << "  structure " << yn(checks.structure_ok) << "\n";
    os << (checks.all() ? "MATCH" : "MISMATCH") << "\n";
  }
  return checks.all() ? kOk : kMismatch;
}

// verify

struct VerifyOptions {
  int m_max = 21;
  int n_max = 0;
  unsigned jobs = 0;
  std::string format = "table";
  std::string out;
};

int cmd_verify(const VerifyOptions& v) {
  if (v.m_max < 3 || v.m_max % 2 == 0) throw InvalidArgument("--m-max must be odd and at least 3");
  const int n_max = v.n_max == 0 ? v.m_max : v.n_max;
  if (n_max < 3 || n_max > v.m_max) throw InvalidArgument("--n-max must satisfy 3 <= n-max <= m-max");

  struct Case {
    pretzel::Params p;
    bool mirrored;
  };
  std::vector<Case> cases;
  for (int m = 3; m <= v.m_max; m += 2) {
    for (int n = 3; n <= std::min(m, n_max); n += 2) {
      for (bool mirrored : {false, true}) cases.push_back({pretzel::Params::make(m, n), mirrored});
    }
  }

  std::vector<std::optional<pretzel::ReportRecord>> records(cases.size());
  std::vector<std::string> errors(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < cases.size(); k = next++) {
      try {
        const auto r = pretzel::compute_invariants(cases[k].p, cases[k].mirrored);
        records[k] = pretzel::make_record(r, pretzel::run_checks(r));
      } catch (const std::exception& e) {
        errors[k] = e.what();
      }
    }
  };
  unsigned jobs = v.jobs == 0 ? std::max(1U, std::thread::hardware_concurrency()) : v.jobs;
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(cases.size()));
  spdlog::info("verifying {} cases with {} jobs", cases.size(), jobs);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<std::string> failures;
  for (std::size_t k = 0; k < cases.size(); ++k) {
    if (!records[k] || !records[k]->checks.all()) {
      failures.push_back(knot_name(cases[k].p, cases[k].mirrored) + (errors[k].empty() ? "" : ": " + errors[k]));
    }
  }

  Output out(v.out);
  auto& os = out.stream();
  if (v.format == "json") {
    json rows = json::array();
    for (const auto& r : records) {
      if (r) rows.push_back(pretzel::to_json(*r));
    }
    os << json{{"cases", rows}, {"total", cases.size()}, {"failures", failures}}.dump(2) << "\n";
  } else {
    os << "   m   n  mirror  family  n(K)  computed        expected        checks\n";
    for (std::size_t k = 0; k < cases.size(); ++k) {
      const auto& c = cases[k];
      os << std::setw(4) << c.p.m << std::setw(4) << c.p.n << std::setw(8) << (c.mirrored ? "yes" : "no");
      if (!records[k]) {
        os << "  ERROR " << errors[k] << "\n";
        continue;
      }
      const auto& r = *records[k];
      os << std::setw(8) << r.family << std::setw(6) << r.n_of_k << "  " << std::left << std::setw(16)
         << triple(r.computed) << std::setw(16) << triple(r.expected) << std::right
         << (r.checks.all() ? "MATCH" : "MISMATCH") << "\n";
    }
    os << cases.size() - failures.size() << "/" << cases.size() << " cases pass\n";
    for (const auto& f : failures) os << "FAILED " << f << "\n";
  }
  return failures.empty() ? kOk : kMismatch;
}

// hfk

int cmd_hfk(const KnotOptions& k, const std::string& format) {
  const auto p = pretzel::Params::make(k.m, k.n);
  const auto full = pretzel::full_complex(p, k.mirror).complex;
  const auto h = hfk_hat(full);
  const auto expected = pretzel::expected_hfk(p, k.mirror);
  const auto delta = alexander_poly(h);
  const bool ok = h == expected && delta == pretzel::expected_alexander(p) && genus(h) == p.genus();
  if (format == "json") {
    std::cout << json{{"m", p.m},
                      {"n", p.n},
                      {"mirrored", k.mirror},
                      {"hfk", to_json(h)},
                      {"alexander", to_json(delta)},
                      {"genus", genus(h)},
                      {"matches_expected", ok}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << knot_name(p, k.mirror) << ", full complex with " << full.size() << " generators\n";
    std::cout << describe_hfk(h);
    std::cout << "Alexander polynomial: " << describe_alexander(delta) << "\n";
    std::cout << "genus: " << genus(h) << "\n";
    std::cout << (ok ? "MATCH" : "MISMATCH") << "\n";
  }
  return ok ? kOk : kMismatch;
}

// show

std::vector<BoxMark> marks(const std::vector<std::pair<Plane, int>>& corners) {
  std::vector<BoxMark> out;
  for (const auto& [c, k] : corners) out.push_back({c, k});
  return out;
}

int cmd_show(const KnotOptions& k, const std::string& which, const std::string& format, const std::string& out_path) {
  const auto p = pretzel::Params::make(k.m, k.n);
  const auto spec = pretzel::classify(p);
  const auto model = which == "full" ? pretzel::full_complex(p, k.mirror) : pretzel::model_complex(p, k.mirror);
  Output out(out_path);
  auto& os = out.stream();
  const auto name = knot_name(p, k.mirror);

  if (which == "full" || which == "model") {
    if (format == "dot") {
      os << to_dot(model.complex, name);
    } else if (format == "json") {
      os << json{{"knot", name},
                 {"complex", to_json(model.complex)},
                 {"iota", map_json(model.complex, model.iota.map.matrix)}}
                .dump(2)
         << "\n";
    } else {
      std::vector<BoxMark> boxes;
      if (which == "full") {
        boxes = marks(pretzel::box_corners(spec, k.mirror));
      } else if (spec.main_diag_boxes == 1) {
        auto all = pretzel::box_corners(spec, k.mirror);
        for (auto& [c, count] : all) {
          if (c.i == c.j) boxes.push_back({c, 1});
        }
      }
      os << name << ", " << which << " complex; digits count boxes\n";
      os << to_ascii(pretzel::staircase(p, k.mirror), boxes);
    }
    return kOk;
  }

  const auto a0 = subquotient(model.complex, Region::a0_minus());
  if (which == "A0") {
    const auto h = homology_over_u(a0);
    if (format == "json") {
      os << json{{"knot", name}, {"complex", complex_json(a0.labels, a0.gradings, a0.diff)},
                 {"homology", to_json(h.module())}}
                .dump(2)
         << "\n";
    } else {
      os << name << ", A0- of the model complex\n" << describe_complex(a0.labels, a0.gradings, a0.diff);
      os << "H = " << describe(h.module()) << "\n";
    }
    return kOk;
  }
  if (which == "cone") {
    const auto cone = build_cone(a0, restrict_map(model.iota.map.matrix, a0, a0));
    const auto r = involutive_vs(cone);
    if (format == "json") {
      os << json{{"knot", name},
                 {"complex", complex_json(cone.labels, cone.gradings, cone.diff)},
                 {"homology", to_json(r.homology)},
                 {"V0_lower", r.v0_lower},
                 {"V0_upper", r.v0_upper}}
                .dump(2)
         << "\n";
    } else {
      os << name << ", AI0- of the model complex\n" << describe_complex(cone.labels, cone.gradings, cone.diff);
      os << "H = " << describe(r.homology) << "\n";
      os << "V0_lower = " << r.v0_lower << "  V0_upper = " << r.v0_upper << "\n";
    }
    return kOk;
  }
  throw InvalidArgument("unknown selection '" + which + "'");
}

// examples

int cmd_examples(const std::vector<std::string>& args, const std::string& format) {
  if (args.empty()) {
    std::cout << "available:";
    for (const auto& n : examples::names()) std::cout << " " << n;
    std::cout << " lspace <w1> <w2> ...\n";
    return kOk;
  }
  examples::KnotExample ex;
  if (args[0] == "lspace") {
    std::vector<int> w;
    for (std::size_t k = 1; k < args.size(); ++k) {
      try {
        w.push_back(std::stoi(args[k]));
      } catch (const std::exception&) {
        throw InvalidArgument("lspace exponents must be integers");
      }
    }
    if (w.empty()) throw InvalidArgument("lspace needs at least one exponent");
    ex = examples::lspace_example(w);
  } else {
    if (args.size() != 1) throw InvalidArgument("unexpected arguments after '" + args[0] + "'");
    ex = examples::by_name(args[0]);
  }
  const auto cone = build_cone(ex.complex, ex.iota);
  const auto r = involutive_vs(cone);
  const int v = v0(ex.complex);
  if (format == "json") {
    std::cout << json{{"name", ex.name},
                      {"complex", to_json(ex.complex)},
                      {"iota", map_json(ex.complex, ex.iota.map.matrix)},
                      {"V0", v},
                      {"V0_lower", r.v0_lower},
                      {"V0_upper", r.v0_upper},
                      {"cone_homology", to_json(r.homology)}}
                     .dump(2)
              << "\n";
    return kOk;
  }
  std::cout << ex.name << "\n";
  std::cout << "generators:\n";
  for (const auto& g : ex.complex.generators()) {
    std::cout << "  " << g.id << "  M=" << g.maslov << "  (" << g.plane.i << "," << g.plane.j << ")\n";
  }
  const auto& d = ex.complex.differential();
  const auto& m = ex.iota.map.matrix;
  auto print_map = [&](const char* title, const LaurentMatrix& f) {
    std::cout << title << ":\n";
    for (std::size_t s = 0; s < ex.complex.size(); ++s) {
      std::cout << "  " << ex.complex.generator(s).id << " ->";
      bool any = false;
      for (std::size_t t = 0; t < ex.complex.size(); ++t) {
        if (f(t, s).is_zero()) continue;
        std::cout << (any ? " + " : " ");
        any = true;
        const int e = f(t, s).exponent();
        if (e != 0) std::cout << (e == 1 ? std::string("U") : "U^" + std::to_string(e));
        std::cout << ex.complex.generator(t).id;
      }
      std::cout << (any ? "" : " 0") << "\n";
    }
  };
  print_map("differential", d);
  print_map("iota", m);
  std::cout << "H(AI0-) = " << describe(r.homology) << "\n";
  std::cout << "V0 = " << v << "  V0_lower = " << r.v0_lower << "  V0_upper = " << r.v0_upper << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  setup_logging();
  CLI::App app{"Involutive knot Floer invariants of the pretzel knots P(-2,m,n)"};
  app.require_subcommand(1);

  KnotOptions inv;
  bool inv_full = false;
  std::string inv_format = "table", inv_out;
  auto* invariants = app.add_subcommand("invariants", "compute V0, V0_lower, V0_upper and compare with the closed form");
  add_knot_options(invariants, inv);
  invariants->add_flag("--full", inv_full, "use the full complex instead of the model");
  invariants->add_option("--format", inv_format)->check(CLI::IsMember({"table", "json"}));
  invariants->add_option("--out", inv_out, "write to a file");

  VerifyOptions ver;
  auto* verify = app.add_subcommand("verify", "sweep all odd 3 <= n <= m <= m-max, both chiralities");
  verify->add_option("--m-max", ver.m_max, "largest m (odd)");
  verify->add_option("--n-max", ver.n_max, "largest n (defaults to m-max)");
  verify->add_option("--jobs,-j", ver.jobs, "worker threads (0 = all cores)");
  verify->add_option("--format", ver.format)->check(CLI::IsMember({"table", "json"}));
  verify->add_option("--out", ver.out, "write to a file");

  KnotOptions hk;
  std::string hfk_format = "table";
  auto* hfk = app.add_subcommand("hfk", "knot Floer homology of the full complex");
  add_knot_options(hfk, hk);
  hfk->add_option("--format", hfk_format)->check(CLI::IsMember({"table", "json"}));

  KnotOptions sk;
  std::string which = "model", show_format = "ascii", show_out;
  auto* show = app.add_subcommand("show", "render a complex");
  add_knot_options(show, sk);
  show->add_option("--which", which)->check(CLI::IsMember({"full", "model", "A0", "cone"}));
  show->add_option("--format", show_format)->check(CLI::IsMember({"dot", "ascii", "json", "table"}));
  show->add_option("--out", show_out, "write to a file");

  std::vector<std::string> ex_args;
  std::string ex_format = "table";
  auto* ex = app.add_subcommand("examples", "worked examples: trefoil, left-trefoil, figure-eight, unknot, lspace w...");
  ex->add_option("name", ex_args, "example name, or lspace followed by Alexander exponents");
  ex->add_option("--format", ex_format)->check(CLI::IsMember({"table", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (invariants->parsed()) return cmd_invariants(inv, inv_full, inv_format, inv_out);
    if (verify->parsed()) return cmd_verify(ver);
    if (hfk->parsed()) return cmd_hfk(hk, hfk_format);
    if (show->parsed()) return cmd_show(sk, which, show_format, show_out);
    if (ex->parsed()) return cmd_examples(ex_args, ex_format);
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  }
  return kUsage;
}
