#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "mukaistab/lattice.hpp"
#include "mukaistab/rational.hpp"
#include "mukaistab/walls.hpp"

namespace mukaistab::cli {

/// Runs one invocation. args[0] is the program name. Results go to out; any
/// failure writes a single-line JSON object {"error": ...} to err and returns
/// a nonzero code (1 for domain errors, 2 for malformed command lines).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Rectangular sample of the (x, t) half-plane; points interpolate the
/// endpoints exactly, steps + 1 per axis.
struct ScanGrid {
  Rational x_lo, x_hi;
  Rational t_lo, t_hi;
  Integer x_steps = 1;
  Integer t_steps = 1;
};

/// "x0,x1,t0,t1,nx,nt"
ScanGrid parse_grid(const std::string& text);

/// CSV with header x,t,N,sign in row-major order (x outer, t inner).
void write_scan_csv(const MukaiVector& a, const MukaiVector& e, const SurfaceContext& ctx,
                    const ScanGrid& grid, std::ostream& out, unsigned threads = 0);

/// Static SVG 1.1 drawing of a wall in the (x, y) half-plane together with
/// the omega^2 = 2 horizon y = 1/sqrt(d). Output depends only on the inputs.
std::string render_wall_svg(const Wall& wall, const SurfaceContext& ctx);

}  // namespace mukaistab::cli
