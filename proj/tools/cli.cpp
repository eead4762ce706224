#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "mukaistab/certify.hpp"
#include "mukaistab/charges.hpp"
#include "mukaistab/json_io.hpp"
#include "mukaistab/walls.hpp"

namespace mukaistab::cli {

namespace {

std::uint64_t seed_from_env(std::uint64_t fallback) {
  if (const char* env = std::getenv("MUKAISTAB_SEED"); env != nullptr && *env != '\0') {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw MathError(std::string("MUKAISTAB_SEED is not an unsigned integer: '") + env + "'");
    }
  }
  return fallback;
}

Json class_or_null(const MukaiVector& v, const SurfaceContext& ctx) {
  if (v.is_zero()) return nullptr;
  return to_string(classify(v, ctx));
}

void print(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// Options shared by the subcommands; each subcommand binds the ones it uses.
struct Inputs {
  Integer d = 0;
  std::string vec_a, vec_b;
  std::string x, t;
  Integer m = 0;
  Integer k = 1;
  Integer r = 0;
  std::string svg_path;
  std::string grid;
  unsigned threads = 0;
  std::string hyp = "gieseker";
  bool locally_free = false;
  std::string lemma_case = "one";
  int samples = 50;
  std::uint64_t seed = 0;
};

SurfaceContext surface(const Inputs& in) { return SurfaceContext(in.d); }

StabilityPoint point(const Inputs& in) { return {parse_rational(in.x), parse_rational(in.t)}; }

}  // namespace

ScanGrid parse_grid(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
  if (parts.size() != 6) throw MathError("grid must be x0,x1,t0,t1,nx,nt, got '" + text + "'");
  ScanGrid g;
  g.x_lo = parse_rational(parts[0]);
  g.x_hi = parse_rational(parts[1]);
  g.t_lo = parse_rational(parts[2]);
  g.t_hi = parse_rational(parts[3]);
  try {
    g.x_steps = std::stoll(parts[4]);
    g.t_steps = std::stoll(parts[5]);
  } catch (const std::exception&) {
    throw MathError("grid steps must be integers, got '" + text + "'");
  }
  if (g.x_lo > g.x_hi || g.t_lo > g.t_hi) throw MathError("grid ranges must be nonempty");
  if (g.t_lo <= 0) throw MathError("grid t range must be positive");
  if (g.x_steps < 1 || g.t_steps < 1) throw MathError("grid steps must be >= 1");
  return g;
}

void write_scan_csv(const MukaiVector& a, const MukaiVector& e, const SurfaceContext& ctx,
                    const ScanGrid& grid, std::ostream& out, unsigned threads) {
  const auto rows = static_cast<std::size_t>(grid.x_steps + 1);
  std::vector<std::string> chunks(rows);

  auto render_row = [&](std::size_t i) {
    const Rational x = grid.x_lo + (grid.x_hi - grid.x_lo) * Rational(static_cast<Integer>(i)) / grid.x_steps;
    std::string text;
    for (Integer j = 0; j <= grid.t_steps; ++j) {
      const Rational t = grid.t_lo + (grid.t_hi - grid.t_lo) * Rational(j) / grid.t_steps;
      const Rational value = n_func(a, e, StabilityPoint(x, t), ctx);
      text += to_string(x) + ',' + to_string(t) + ',' + to_string(value) + ',' + std::to_string(sign(value)) + '\n';
    }
    chunks[i] = std::move(text);
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, rows));
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> failures(threads);
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < rows; i += threads) render_row(i);
      } catch (...) {
        failures[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  out << "x,t,N,sign\n";
  for (const auto& c : chunks) out << c;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Mukai-lattice and Bridgeland-stability computations on a Picard-rank-one K3."};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  Inputs in;
  std::function<void()> action;

  auto add_d = [&](CLI::App* sub) { sub->add_option("-d", in.d, "half-degree d = L^2/2")->required(); };
  auto add_point = [&](CLI::App* sub, bool required) {
    auto* x = sub->add_option("-x", in.x, "beta = xL (rational, 'p/q' or decimal)");
    auto* t = sub->add_option("-t", in.t, "t = y^2 with omega = yL (rational > 0)");
    if (required) {
      x->required();
      t->required();
    } else {
      x->needs(t);
      t->needs(x);
    }
  };

  auto* pair = app.add_subcommand("pair", "Mukai pairing, Euler characteristic and squares");
  add_d(pair);
  pair->add_option("A", in.vec_a, "[r,n,s]")->required();
  pair->add_option("B", in.vec_b, "[r,n,s]")->required();
  pair->callback([&] {
    action = [&] {
      const auto ctx = surface(in);
      const auto a = parse_vector(in.vec_a);
      const auto b = parse_vector(in.vec_b);
      print(out, Json{{"surface", encode(ctx)},
                      {"a", encode(a)},
                      {"b", encode(b)},
                      {"pairing", pairing(a, b, ctx)},
                      {"chi", euler_chi(a, b, ctx)},
                      {"a_square", self_square(a, ctx)},
                      {"b_square", self_square(b, ctx)},
                      {"a_class", class_or_null(a, ctx)},
                      {"b_class", class_or_null(b, ctx)}});
    };
  });

  auto* charge = app.add_subcommand("charge", "Central charge and phase key");
  add_d(charge);
  charge->add_option("V", in.vec_a, "[r,n,s]")->required();
  add_point(charge, true);
  charge->callback([&] {
    action = [&] {
      const auto ctx = surface(in);
      const auto v = parse_vector(in.vec_a);
      const auto z = central_charge(v, point(in), ctx);
      Json j{{"vector", encode(v)}, {"charge", encode(z)}};
      if (z.is_zero()) {
        j["phase"] = nullptr;
        j["phase_value"] = nullptr;
      } else {
        j["phase"] = encode(phase_key(z));
        j["phase_value"] = approximate_phase(z);
      }
      print(out, j);
    };
  });

  auto* inv = app.add_subcommand("inv", "Membership in V(X), V(X)_{>2} and goodness");
  add_d(inv);
  add_point(inv, true);
  auto* inv_m = inv->add_option("-m", in.m, "also test V(X)^M_{>2} for M = mL");
  inv->callback([&] {
    action = [&] {
      const auto ctx = surface(in);
      const auto pt = point(in);
      Json j{{"point", encode(pt)},
             {"in_V", in_V(pt, ctx)},
             {"in_V_gt2", in_V_gt2(pt, ctx)},
             {"is_good", is_good(pt, ctx)}};
      if (inv_m->count() > 0) j["in_VM_gt2"] = vm_membership(pt, in.m, ctx);
      print(out, j);
    };
  });

  auto* wall = app.add_subcommand("wall", "Wall N_{A,E} = 0 in the (x, y) half-plane");
  add_d(wall);
  wall->add_option("A", in.vec_a, "[r,n,s]")->required();
  wall->add_option("E", in.vec_b, "[r,n,s]")->required();
  wall->add_option("--svg", in.svg_path, "write an SVG drawing to FILE");
  wall->callback([&] {
    action = [&] {
      const auto ctx = surface(in);
      const auto w = wall_between(parse_vector(in.vec_a), parse_vector(in.vec_b), ctx);
      if (!in.svg_path.empty()) {
        std::ofstream file(in.svg_path, std::ios::binary);
        if (!file) throw MathError("cannot write '" + in.svg_path + "'");
        file << render_wall_svg(w, ctx);
      }
      print(out, encode(w));
    };
  });

  auto* region = app.add_subcommand("region53", "Destabilizing circle of O_X against E = (r, 1, d/r)");
  add_d(region);
  region->add_option("-r", in.r, "rank of E (must divide d)")->required();
  region->callback([&] {
    action = [&] {
      const auto ctx = surface(in);
      if (in.r <= 0 || in.d % in.r != 0) throw MathError("-r must be a positive divisor of d");
      print(out, encode(example53_wall(MukaiVector{in.r, 1, in.d / in.r}, ctx)));
    };
  });

  auto* partners = app.add_subcommand("partners", "Fourier-Mukai partners as pairs (r, s)");
  add_d(partners);
  partners->callback([&] {
    action = [&] {
      const auto ctx = surface(in);
      Json list = Json::array();
      for (auto [r, s] : fm_partners(ctx)) list.push_back({r, s});
      print(out, Json{{"d", ctx.d()}, {"count", list.size()}, {"partners", list}});
    };
  });

  auto* certify = app.add_subcommand("certify", "Stability certificates");
  certify->require_subcommand(1);

  auto* t47 = certify->add_subcommand("t47", "Semi-rigid sheaf at a point of V(X)_{>2}");
  add_d(t47);
  t47->add_option("V", in.vec_a, "[r,n,s]")->required();
  add_point(t47, false);
  t47->add_option("--hyp", in.hyp, "sheaf hypothesis")
      ->check(CLI::IsMember({"gieseker", "mu-locally-free"}));
  t47->callback([&] {
    action = [&] {
      const auto ctx = surface(in);
      const auto v = parse_vector(in.vec_a);
      const auto hyp = in.hyp == "gieseker" ? SheafHypothesis::GiesekerStable : SheafHypothesis::MuStableLocallyFree;
      print(out, encode(in.x.empty() ? theorem47_region(v, ctx, hyp) : theorem47(v, point(in), ctx, hyp)));
    };
  });

  auto* c48 = certify->add_subcommand("c48", "mu-stable locally free semi-rigid sheaf over U(X)_{>2}");
  add_d(c48);
  c48->add_option("V", in.vec_a, "[r,n,s]")->required();
  c48->add_flag("--locally-free", in.locally_free, "assert that the sheaf is locally free");
  c48->callback([&] {
    action = [&] { print(out, encode(cor48(parse_vector(in.vec_a), surface(in), in.locally_free))); };
  });

  auto* p52 = certify->add_subcommand("p52", "Spherical sheaf, at a point or over U(X)_{>2}");
  add_d(p52);
  p52->add_option("V", in.vec_a, "[r,n,s]")->required();
  add_point(p52, false);
  p52->callback([&] {
    action = [&] {
      const auto ctx = surface(in);
      std::optional<StabilityPoint> pt;
      if (!in.x.empty()) pt = point(in);
      print(out, encode(prop52(parse_vector(in.vec_a), pt, ctx)));
    };
  });

  auto add_lemma = [&](const char* name, const char* help, bool semi_rigid) {
    auto* sub = certify->add_subcommand(name, help);
    add_d(sub);
    sub->add_option("E", in.vec_a, "[r,n,s]")->required();
    sub->add_option("A", in.vec_b, "[r,n,s] (spherical)")->required();
    sub->add_option("--case", in.lemma_case, "region")->check(CLI::IsMember({"one", "two"}));
    sub->add_option("--samples", in.samples, "random interior spot checks")->check(CLI::NonNegativeNumber);
    auto* seed = sub->add_option("--seed", in.seed, "sampling seed (default: MUKAISTAB_SEED or fixed)");
    sub->callback([&, semi_rigid, seed] {
      action = [&, semi_rigid, seed] {
        const auto ctx = surface(in);
        SamplingOptions opts;
        opts.samples = in.samples;
        opts.seed = seed->count() > 0 ? in.seed : seed_from_env(opts.seed);
        const auto which = in.lemma_case == "one" ? LemmaCase::One : LemmaCase::Two;
        const auto e = parse_vector(in.vec_a);
        const auto a = parse_vector(in.vec_b);
        print(out, encode(semi_rigid ? lemma46_certify(e, a, ctx, which, opts) : lemma51_certify(e, a, ctx, which, opts)));
      };
    });
  };
  add_lemma("l46", "Phase inequality: semi-rigid E against spherical A", true);
  add_lemma("l51", "Phase inequality: spherical E against spherical A", false);

  auto* hn = app.add_subcommand("hn", "HN filtration of T_S^k(O_x)");
  add_d(hn);
  hn->add_option("S", in.vec_a, "[r,n,s] spherical")->required();
  hn->add_option("-k", in.k, "twist power")->check(CLI::PositiveNumber);
  add_point(hn, true);
  hn->callback([&] {
    action = [&] { print(out, encode(hn_twisted_skyscraper(parse_vector(in.vec_a), in.k, point(in), surface(in)))); };
  });

  auto* scan = app.add_subcommand("scan", "CSV of N_{A,E} over an exact grid");
  add_d(scan);
  scan->add_option("A", in.vec_a, "[r,n,s]")->required();
  scan->add_option("E", in.vec_b, "[r,n,s]")->required();
  scan->add_option("--grid", in.grid, "x0,x1,t0,t1,nx,nt")->required();
  scan->add_option("--threads", in.threads, "worker threads (0 = hardware)");
  scan->callback([&] {
    action = [&] {
      write_scan_csv(parse_vector(in.vec_a), parse_vector(in.vec_b), surface(in), parse_grid(in.grid), out,
                     in.threads);
    };
  });

  auto* twist = app.add_subcommand("twist", "Spherical twist by v(mL)");
  add_d(twist);
  twist->add_option("V", in.vec_a, "[r,n,s]")->required();
  twist->add_option("-m", in.m, "line bundle mL")->required();
  twist->add_option("-k", in.k, "twist power")->check(CLI::Range(Integer{1}, Integer{1000000}));
  twist->callback([&] {
    action = [&] {
      const auto ctx = surface(in);
      const auto v = parse_vector(in.vec_a);
      const auto sph = vector_line_bundle(in.m, ctx);
      print(out, Json{{"vector", encode(v)},
                      {"sph", encode(sph)},
                      {"k", in.k},
                      {"twisted", encode(iterated_twist(v, sph, in.k, ctx))}});
    };
  });

  auto* destab = app.add_subcommand("destab", "Line-bundle twist turning E into a complex of nonzero rank");
  add_d(destab);
  destab->add_option("E", in.vec_a, "[r,n,s]")->required();
  destab->callback([&] {
    action = [&] {
      const auto ctx = surface(in);
      const auto e = parse_vector(in.vec_a);
      Json j = encode(find_destabilizing_twist(e, ctx));
      j["vector"] = encode(e);
      print(out, j);
    };
  });

  std::vector<std::string> storage = args;
  if (storage.empty()) storage.emplace_back("mukaistab");
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    err << Json{{"error", e.what()}, {"kind", "usage"}}.dump() << '\n';
    return 2;
  }

  try {
    if (action) action();
  } catch (const std::exception& e) {
    err << Json{{"error", e.what()}}.dump() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace mukaistab::cli
