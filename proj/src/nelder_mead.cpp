#include "pmwitness/nelder_mead.hpp"

#include <algorithm>
#include <cmath>

namespace pmw {

namespace {

struct Vertex {
  std::array<double, 2> x;
  double f;
};

std::array<double, 2> lerp(const std::array<double, 2>& base, const std::array<double, 2>& toward,
                           double t) {
  return {base[0] + t * (toward[0] - base[0]), base[1] + t * (toward[1] - base[1])};
}

}  // namespace

NelderMeadResult nelder_mead_2d(const std::function<double(double, double)>& f,
                                std::array<double, 2> start, std::array<double, 2> step,
                                const NelderMeadOptions& opts) {
  auto eval = [&](const std::array<double, 2>& x) { return Vertex{x, f(x[0], x[1])}; };

  std::array<Vertex, 3> s = {eval(start), eval({start[0] + step[0], start[1]}),
                             eval({start[0], start[1] + step[1]})};
  auto by_value = [](const Vertex& a, const Vertex& b) { return a.f < b.f; };

  int it = 0;
  bool converged = false;
  for (; it < opts.max_iterations; ++it) {
    std::sort(s.begin(), s.end(), by_value);
    if (s[2].f - s[0].f <= opts.tolerance) {
      converged = true;
      break;
    }
    const std::array<double, 2> centroid = {0.5 * (s[0].x[0] + s[1].x[0]),
                                            0.5 * (s[0].x[1] + s[1].x[1])};

    const Vertex r = eval(lerp(centroid, s[2].x, -opts.reflection));
    if (r.f < s[0].f) {
      const Vertex e = eval(lerp(centroid, s[2].x, -opts.expansion));
      s[2] = e.f < r.f ? e : r;
      continue;
    }
    if (r.f < s[1].f) {
      s[2] = r;
      continue;
    }
    // contraction, outside if the reflected point beat the worst vertex
    const bool outside = r.f < s[2].f;
    const Vertex c = outside ? eval(lerp(centroid, r.x, opts.contraction))
                             : eval(lerp(centroid, s[2].x, opts.contraction));
    if (c.f < (outside ? r.f : s[2].f)) {
      s[2] = c;
      continue;
    }
    for (int k = 1; k < 3; ++k) s[k] = eval(lerp(s[0].x, s[k].x, opts.shrink));
  }
  std::sort(s.begin(), s.end(), by_value);
  return {s[0].x, s[0].f, it, converged};
}

}  // namespace pmw
