#include "ifnas/kernels.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ifnas::kernels {

namespace {
thread_local Exec g_exec = Exec::Parallel;

inline int out_extent(int n, int stride) { return (n + stride - 1) / stride; }
}  // namespace

Exec exec_policy() { return g_exec; }
void set_exec_policy(Exec e) { g_exec = e; }

// ===========================================================================
// Serial reference
// ===========================================================================
namespace serial {

void relu_fwd(const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = x[i] > 0.0 ? x[i] : 0.0;
}

void relu_bwd(const double* x, const double* dy, double* dx, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (x[i] > 0.0) dx[i] += dy[i];
}

void dwconv3x3_fwd(const double* x, const double* w, double* y, int B, int C, int H, int W) {
  for (int b = 0; b < B; ++b) {
    for (int c = 0; c < C; ++c) {
      const double* xp = x + (static_cast<std::size_t>(b) * C + c) * H * W;
      const double* wp = w + static_cast<std::size_t>(c) * 9;
      double* yp = y + (static_cast<std::size_t>(b) * C + c) * H * W;
      for (int oy = 0; oy < H; ++oy) {
        for (int ox = 0; ox < W; ++ox) {
          double acc = 0.0;
          for (int ky = 0; ky < 3; ++ky) {
            int iy = oy + ky - 1;
            if (iy < 0 || iy >= H) continue;
            for (int kx = 0; kx < 3; ++kx) {
              int ix = ox + kx - 1;
              if (ix < 0 || ix >= W) continue;
              acc += wp[ky * 3 + kx] * xp[iy * W + ix];
            }
          }
          yp[oy * W + ox] = acc;
        }
      }
    }
  }
}

void dwconv3x3_bwd_data(const double* w, const double* dy, double* dx, int B, int C, int H, int W) {
  for (int b = 0; b < B; ++b) {
    for (int c = 0; c < C; ++c) {
      const double* wp = w + static_cast<std::size_t>(c) * 9;
      const double* gp = dy + (static_cast<std::size_t>(b) * C + c) * H * W;
      double* dp = dx + (static_cast<std::size_t>(b) * C + c) * H * W;
      // dx[iy,ix] += sum over kernel taps of w * dy at the output that read it
      for (int iy = 0; iy < H; ++iy) {
        for (int ix = 0; ix < W; ++ix) {
          double acc = 0.0;
          for (int ky = 0; ky < 3; ++ky) {
            int oy = iy - ky + 1;
            if (oy < 0 || oy >= H) continue;
            for (int kx = 0; kx < 3; ++kx) {
              int ox = ix - kx + 1;
              if (ox < 0 || ox >= W) continue;
              acc += wp[ky * 3 + kx] * gp[oy * W + ox];
            }
          }
          dp[iy * W + ix] += acc;
        }
      }
    }
  }
}

void dwconv3x3_bwd_weight(const double* x, const double* dy, double* dw, int B, int C, int H, int W) {
  // One reduction per weight, fixed (b, oy, ox) order: deterministic and
  // trivially parallel over the weight index.
  for (int c = 0; c < C; ++c) {
    for (int ky = 0; ky < 3; ++ky) {
      for (int kx = 0; kx < 3; ++kx) {
        double acc = 0.0;
        for (int b = 0; b < B; ++b) {
          const double* xp = x + (static_cast<std::size_t>(b) * C + c) * H * W;
          const double* gp = dy + (static_cast<std::size_t>(b) * C + c) * H * W;
          for (int oy = 0; oy < H; ++oy) {
            int iy = oy + ky - 1;
            if (iy < 0 || iy >= H) continue;
            for (int ox = 0; ox < W; ++ox) {
              int ix = ox + kx - 1;
              if (ix < 0 || ix >= W) continue;
              acc += gp[oy * W + ox] * xp[iy * W + ix];
            }
          }
        }
        dw[(static_cast<std::size_t>(c) * 3 + ky) * 3 + kx] += acc;
      }
    }
  }
}

void pwconv_fwd(const double* x, const double* w, const double* b, double* y,
                int B, int Ci, int Co, int H, int W, int stride) {
  const int Ho = out_extent(H, stride), Wo = out_extent(W, stride);
  for (int n = 0; n < B; ++n) {
    for (int co = 0; co < Co; ++co) {
      double* yp = y + (static_cast<std::size_t>(n) * Co + co) * Ho * Wo;
      const double* wp = w + static_cast<std::size_t>(co) * Ci;
      for (int oy = 0; oy < Ho; ++oy) {
        for (int ox = 0; ox < Wo; ++ox) {
          double acc = b ? b[co] : 0.0;
          const int iy = oy * stride, ix = ox * stride;
          for (int ci = 0; ci < Ci; ++ci)
            acc += wp[ci] * x[((static_cast<std::size_t>(n) * Ci + ci) * H + iy) * W + ix];
          yp[oy * Wo + ox] = acc;
        }
      }
    }
  }
}

void pwconv_bwd_data(const double* w, const double* dy, double* dx,
                     int B, int Ci, int Co, int H, int W, int stride) {
  const int Ho = out_extent(H, stride), Wo = out_extent(W, stride);
  for (int n = 0; n < B; ++n) {
    for (int ci = 0; ci < Ci; ++ci) {
      double* dp = dx + (static_cast<std::size_t>(n) * Ci + ci) * H * W;
      for (int oy = 0; oy < Ho; ++oy) {
        for (int ox = 0; ox < Wo; ++ox) {
          double acc = 0.0;
          for (int co = 0; co < Co; ++co)
            acc += w[static_cast<std::size_t>(co) * Ci + ci] *
                   dy[((static_cast<std::size_t>(n) * Co + co) * Ho + oy) * Wo + ox];
          dp[(oy * stride) * W + (ox * stride)] += acc;
        }
      }
    }
  }
}

void pwconv_bwd_weight(const double* x, const double* dy, double* dw, double* db,
                       int B, int Ci, int Co, int H, int W, int stride) {
  const int Ho = out_extent(H, stride), Wo = out_extent(W, stride);
  for (int co = 0; co < Co; ++co) {
    for (int ci = 0; ci < Ci; ++ci) {
      double acc = 0.0;
      for (int n = 0; n < B; ++n) {
        const double* gp = dy + (static_cast<std::size_t>(n) * Co + co) * Ho * Wo;
        const double* xp = x + (static_cast<std::size_t>(n) * Ci + ci) * H * W;
        for (int oy = 0; oy < Ho; ++oy)
          for (int ox = 0; ox < Wo; ++ox)
            acc += gp[oy * Wo + ox] * xp[(oy * stride) * W + (ox * stride)];
      }
      dw[static_cast<std::size_t>(co) * Ci + ci] += acc;
    }
  }
  if (db) {
    for (int co = 0; co < Co; ++co) {
      double acc = 0.0;
      for (int n = 0; n < B; ++n) {
        const double* gp = dy + (static_cast<std::size_t>(n) * Co + co) * Ho * Wo;
        for (int i = 0; i < Ho * Wo; ++i) acc += gp[i];
      }
      db[co] += acc;
    }
  }
}

void linear_fwd(const double* x, const double* w, const double* b, double* y,
                int B, int Fi, int Fo) {
  for (int n = 0; n < B; ++n) {
    for (int o = 0; o < Fo; ++o) {
      double acc = b ? b[o] : 0.0;
      const double* wp = w + static_cast<std::size_t>(o) * Fi;
      const double* xp = x + static_cast<std::size_t>(n) * Fi;
      for (int i = 0; i < Fi; ++i) acc += wp[i] * xp[i];
      y[static_cast<std::size_t>(n) * Fo + o] = acc;
    }
  }
}

void linear_bwd_data(const double* w, const double* dy, double* dx, int B, int Fi, int Fo) {
  for (int n = 0; n < B; ++n) {
    for (int i = 0; i < Fi; ++i) {
      double acc = 0.0;
      for (int o = 0; o < Fo; ++o)
        acc += w[static_cast<std::size_t>(o) * Fi + i] * dy[static_cast<std::size_t>(n) * Fo + o];
      dx[static_cast<std::size_t>(n) * Fi + i] += acc;
    }
  }
}

void linear_bwd_weight(const double* x, const double* dy, double* dw, double* db,
                       int B, int Fi, int Fo) {
  for (int o = 0; o < Fo; ++o) {
    for (int i = 0; i < Fi; ++i) {
      double acc = 0.0;
      for (int n = 0; n < B; ++n)
        acc += dy[static_cast<std::size_t>(n) * Fo + o] * x[static_cast<std::size_t>(n) * Fi + i];
      dw[static_cast<std::size_t>(o) * Fi + i] += acc;
    }
  }
  if (db) {
    for (int o = 0; o < Fo; ++o) {
      double acc = 0.0;
      for (int n = 0; n < B; ++n) acc += dy[static_cast<std::size_t>(n) * Fo + o];
      db[o] += acc;
    }
  }
}

void gap_fwd(const double* x, double* y, int B, int C, int H, int W) {
  const double inv = 1.0 / (static_cast<double>(H) * W);
  for (int n = 0; n < B; ++n) {
    for (int c = 0; c < C; ++c) {
      const double* xp = x + (static_cast<std::size_t>(n) * C + c) * H * W;
      double acc = 0.0;
      for (int i = 0; i < H * W; ++i) acc += xp[i];
      y[static_cast<std::size_t>(n) * C + c] = acc * inv;
    }
  }
}

void gap_bwd(const double* dy, double* dx, int B, int C, int H, int W) {
  const double inv = 1.0 / (static_cast<double>(H) * W);
  for (int n = 0; n < B; ++n) {
    for (int c = 0; c < C; ++c) {
      const double g = dy[static_cast<std::size_t>(n) * C + c] * inv;
      double* dp = dx + (static_cast<std::size_t>(n) * C + c) * H * W;
      for (int i = 0; i < H * W; ++i) dp[i] += g;
    }
  }
}

void axpy(double s, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += s * x[i];
}

}  // namespace serial

// ===========================================================================
// OpenMP kernels. Each loop iteration owns a disjoint output slice and runs
// the same inner accumulation order as the serial reference.
// ===========================================================================
namespace par {

#ifdef _OPENMP

void relu_fwd(const double* x, double* y, std::size_t n) {
  const long long nn = static_cast<long long>(n);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < nn; ++i) y[i] = x[i] > 0.0 ? x[i] : 0.0;
}

void relu_bwd(const double* x, const double* dy, double* dx, std::size_t n) {
  const long long nn = static_cast<long long>(n);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < nn; ++i)
    if (x[i] > 0.0) dx[i] += dy[i];
}

void dwconv3x3_fwd(const double* x, const double* w, double* y, int B, int C, int H, int W) {
#pragma omp parallel for collapse(2) schedule(static)
  for (int b = 0; b < B; ++b) {
    for (int c = 0; c < C; ++c) {
      const double* xp = x + (static_cast<std::size_t>(b) * C + c) * H * W;
      const double* wp = w + static_cast<std::size_t>(c) * 9;
      double* yp = y + (static_cast<std::size_t>(b) * C + c) * H * W;
      for (int oy = 0; oy < H; ++oy) {
        for (int ox = 0; ox < W; ++ox) {
          double acc = 0.0;
          for (int ky = 0; ky < 3; ++ky) {
            int iy = oy + ky - 1;
            if (iy < 0 || iy >= H) continue;
            for (int kx = 0; kx < 3; ++kx) {
              int ix = ox + kx - 1;
              if (ix < 0 || ix >= W) continue;
              acc += wp[ky * 3 + kx] * xp[iy * W + ix];
            }
          }
          yp[oy * W + ox] = acc;
        }
      }
    }
  }
}

void dwconv3x3_bwd_data(const double* w, const double* dy, double* dx, int B, int C, int H, int W) {
#pragma omp parallel for collapse(2) schedule(static)
  for (int b = 0; b < B; ++b) {
    for (int c = 0; c < C; ++c) {
      const double* wp = w + static_cast<std::size_t>(c) * 9;
      const double* gp = dy + (static_cast<std::size_t>(b) * C + c) * H * W;
      double* dp = dx + (static_cast<std::size_t>(b) * C + c) * H * W;
      for (int iy = 0; iy < H; ++iy) {
        for (int ix = 0; ix < W; ++ix) {
          double acc = 0.0;
          for (int ky = 0; ky < 3; ++ky) {
            int oy = iy - ky + 1;
            if (oy < 0 || oy >= H) continue;
            for (int kx = 0; kx < 3; ++kx) {
              int ox = ix - kx + 1;
              if (ox < 0 || ox >= W) continue;
              acc += wp[ky * 3 + kx] * gp[oy * W + ox];
            }
          }
          dp[iy * W + ix] += acc;
        }
      }
    }
  }
}

void dwconv3x3_bwd_weight(const double* x, const double* dy, double* dw, int B, int C, int H, int W) {
#pragma omp parallel for collapse(2) schedule(static)
  for (int c = 0; c < C; ++c) {
    for (int k = 0; k < 9; ++k) {
      const int ky = k / 3, kx = k % 3;
      double acc = 0.0;
      for (int b = 0; b < B; ++b) {
        const double* xp = x + (static_cast<std::size_t>(b) * C + c) * H * W;
        const double* gp = dy + (static_cast<std::size_t>(b) * C + c) * H * W;
        for (int oy = 0; oy < H; ++oy) {
          int iy = oy + ky - 1;
          if (iy < 0 || iy >= H) continue;
          for (int ox = 0; ox < W; ++ox) {
            int ix = ox + kx - 1;
            if (ix < 0 || ix >= W) continue;
            acc += gp[oy * W + ox] * xp[iy * W + ix];
          }
        }
      }
      dw[static_cast<std::size_t>(c) * 9 + k] += acc;
    }
  }
}

void pwconv_fwd(const double* x, const double* w, const double* b, double* y,
                int B, int Ci, int Co, int H, int W, int stride) {
  const int Ho = out_extent(H, stride), Wo = out_extent(W, stride);
#pragma omp parallel for collapse(2) schedule(static)
  for (int n = 0; n < B; ++n) {
    for (int co = 0; co < Co; ++co) {
      double* yp = y + (static_cast<std::size_t>(n) * Co + co) * Ho * Wo;
      const double* wp = w + static_cast<std::size_t>(co) * Ci;
      for (int oy = 0; oy < Ho; ++oy) {
        for (int ox = 0; ox < Wo; ++ox) {
          double acc = b ? b[co] : 0.0;
          const int iy = oy * stride, ix = ox * stride;
          for (int ci = 0; ci < Ci; ++ci)
            acc += wp[ci] * x[((static_cast<std::size_t>(n) * Ci + ci) * H + iy) * W + ix];
          yp[oy * Wo + ox] = acc;
        }
      }
    }
  }
}

void pwconv_bwd_data(const double* w, const double* dy, double* dx,
                     int B, int Ci, int Co, int H, int W, int stride) {
  const int Ho = out_extent(H, stride), Wo = out_extent(W, stride);
#pragma omp parallel for collapse(2) schedule(static)
  for (int n = 0; n < B; ++n) {
    for (int ci = 0; ci < Ci; ++ci) {
      double* dp = dx + (static_cast<std::size_t>(n) * Ci + ci) * H * W;
      for (int oy = 0; oy < Ho; ++oy) {
        for (int ox = 0; ox < Wo; ++ox) {
          double acc = 0.0;
          for (int co = 0; co < Co; ++co)
            acc += w[static_cast<std::size_t>(co) * Ci + ci] *
                   dy[((static_cast<std::size_t>(n) * Co + co) * Ho + oy) * Wo + ox];
          dp[(oy * stride) * W + (ox * stride)] += acc;
        }
      }
    }
  }
}

void pwconv_bwd_weight(const double* x, const double* dy, double* dw, double* db,
                       int B, int Ci, int Co, int H, int W, int stride) {
  const int Ho = out_extent(H, stride), Wo = out_extent(W, stride);
#pragma omp parallel for collapse(2) schedule(static)
  for (int co = 0; co < Co; ++co) {
    for (int ci = 0; ci < Ci; ++ci) {
      double acc = 0.0;
      for (int n = 0; n < B; ++n) {
        const double* gp = dy + (static_cast<std::size_t>(n) * Co + co) * Ho * Wo;
        const double* xp = x + (static_cast<std::size_t>(n) * Ci + ci) * H * W;
        for (int oy = 0; oy < Ho; ++oy)
          for (int ox = 0; ox < Wo; ++ox)
            acc += gp[oy * Wo + ox] * xp[(oy * stride) * W + (ox * stride)];
      }
      dw[static_cast<std::size_t>(co) * Ci + ci] += acc;
    }
  }
  if (db) {
#pragma omp parallel for schedule(static)
    for (int co = 0; co < Co; ++co) {
      double acc = 0.0;
      for (int n = 0; n < B; ++n) {
        const double* gp = dy + (static_cast<std::size_t>(n) * Co + co) * Ho * Wo;
        for (int i = 0; i < Ho * Wo; ++i) acc += gp[i];
      }
      db[co] += acc;
    }
  }
}

void linear_fwd(const double* x, const double* w, const double* b, double* y,
                int B, int Fi, int Fo) {
#pragma omp parallel for collapse(2) schedule(static)
  for (int n = 0; n < B; ++n) {
    for (int o = 0; o < Fo; ++o) {
      double acc = b ? b[o] : 0.0;
      const double* wp = w + static_cast<std::size_t>(o) * Fi;
      const double* xp = x + static_cast<std::size_t>(n) * Fi;
      for (int i = 0; i < Fi; ++i) acc += wp[i] * xp[i];
      y[static_cast<std::size_t>(n) * Fo + o] = acc;
    }
  }
}

void linear_bwd_data(const double* w, const double* dy, double* dx, int B, int Fi, int Fo) {
#pragma omp parallel for collapse(2) schedule(static)
  for (int n = 0; n < B; ++n) {
    for (int i = 0; i < Fi; ++i) {
      double acc = 0.0;
      for (int o = 0; o < Fo; ++o)
        acc += w[static_cast<std::size_t>(o) * Fi + i] * dy[static_cast<std::size_t>(n) * Fo + o];
      dx[static_cast<std::size_t>(n) * Fi + i] += acc;
    }
  }
}

void linear_bwd_weight(const double* x, const double* dy, double* dw, double* db,
                       int B, int Fi, int Fo) {
#pragma omp parallel for collapse(2) schedule(static)
  for (int o = 0; o < Fo; ++o) {
    for (int i = 0; i < Fi; ++i) {
      double acc = 0.0;
      for (int n = 0; n < B; ++n)
        acc += dy[static_cast<std::size_t>(n) * Fo + o] * x[static_cast<std::size_t>(n) * Fi + i];
      dw[static_cast<std::size_t>(o) * Fi + i] += acc;
    }
  }
  if (db) {
#pragma omp parallel for schedule(static)
    for (int o = 0; o < Fo; ++o) {
      double acc = 0.0;
      for (int n = 0; n < B; ++n) acc += dy[static_cast<std::size_t>(n) * Fo + o];
      db[o] += acc;
    }
  }
}

void gap_fwd(const double* x, double* y, int B, int C, int H, int W) {
  const double inv = 1.0 / (static_cast<double>(H) * W);
#pragma omp parallel for collapse(2) schedule(static)
  for (int n = 0; n < B; ++n) {
    for (int c = 0; c < C; ++c) {
      const double* xp = x + (static_cast<std::size_t>(n) * C + c) * H * W;
      double acc = 0.0;
      for (int i = 0; i < H * W; ++i) acc += xp[i];
      y[static_cast<std::size_t>(n) * C + c] = acc * inv;
    }
  }
}

void gap_bwd(const double* dy, double* dx, int B, int C, int H, int W) {
  const double inv = 1.0 / (static_cast<double>(H) * W);
#pragma omp parallel for collapse(2) schedule(static)
  for (int n = 0; n < B; ++n) {
    for (int c = 0; c < C; ++c) {
      const double g = dy[static_cast<std::size_t>(n) * C + c] * inv;
      double* dp = dx + (static_cast<std::size_t>(n) * C + c) * H * W;
      for (int i = 0; i < H * W; ++i) dp[i] += g;
    }
  }
}

void axpy(double s, const double* x, double* y, std::size_t n) {
  const long long nn = static_cast<long long>(n);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < nn; ++i) y[i] += s * x[i];
}

#else  // !_OPENMP

void relu_fwd(const double* x, double* y, std::size_t n) { serial::relu_fwd(x, y, n); }
void relu_bwd(const double* x, const double* dy, double* dx, std::size_t n) {
  serial::relu_bwd(x, dy, dx, n);
}
void dwconv3x3_fwd(const double* x, const double* w, double* y, int B, int C, int H, int W) {
  serial::dwconv3x3_fwd(x, w, y, B, C, H, W);
}
void dwconv3x3_bwd_data(const double* w, const double* dy, double* dx, int B, int C, int H, int W) {
  serial::dwconv3x3_bwd_data(w, dy, dx, B, C, H, W);
}
void dwconv3x3_bwd_weight(const double* x, const double* dy, double* dw, int B, int C, int H, int W) {
  serial::dwconv3x3_bwd_weight(x, dy, dw, B, C, H, W);
}
void pwconv_fwd(const double* x, const double* w, const double* b, double* y,
                int B, int Ci, int Co, int H, int W, int stride) {
  serial::pwconv_fwd(x, w, b, y, B, Ci, Co, H, W, stride);
}
void pwconv_bwd_data(const double* w, const double* dy, double* dx,
                     int B, int Ci, int Co, int H, int W, int stride) {
  serial::pwconv_bwd_data(w, dy, dx, B, Ci, Co, H, W, stride);
}
void pwconv_bwd_weight(const double* x, const double* dy, double* dw, double* db,
                       int B, int Ci, int Co, int H, int W, int stride) {
  serial::pwconv_bwd_weight(x, dy, dw, db, B, Ci, Co, H, W, stride);
}
void linear_fwd(const double* x, const double* w, const double* b, double* y,
                int B, int Fi, int Fo) {
  serial::linear_fwd(x, w, b, y, B, Fi, Fo);
}
void linear_bwd_data(const double* w, const double* dy, double* dx, int B, int Fi, int Fo) {
  serial::linear_bwd_data(w, dy, dx, B, Fi, Fo);
}
void linear_bwd_weight(const double* x, const double* dy, double* dw, double* db,
                       int B, int Fi, int Fo) {
  serial::linear_bwd_weight(x, dy, dw, db, B, Fi, Fo);
}
void gap_fwd(const double* x, double* y, int B, int C, int H, int W) {
  serial::gap_fwd(x, y, B, C, H, W);
}
void gap_bwd(const double* dy, double* dx, int B, int C, int H, int W) {
  serial::gap_bwd(dy, dx, B, C, H, W);
}
void axpy(double s, const double* x, double* y, std::size_t n) { serial::axpy(s, x, y, n); }

#endif  // _OPENMP

}  // namespace par

// ===========================================================================
// Dispatch
// ===========================================================================

#define IFNAS_DISPATCH(fn, ...)                          \
  do {                                                   \
    if (g_exec == Exec::Parallel)                        \
      par::fn(__VA_ARGS__);                              \
    else                                                 \
      serial::fn(__VA_ARGS__);                           \
  } while (0)

void relu_fwd(const double* x, double* y, std::size_t n) { IFNAS_DISPATCH(relu_fwd, x, y, n); }
void relu_bwd(const double* x, const double* dy, double* dx, std::size_t n) {
  IFNAS_DISPATCH(relu_bwd, x, dy, dx, n);
}
void dwconv3x3_fwd(const double* x, const double* w, double* y, int B, int C, int H, int W) {
  IFNAS_DISPATCH(dwconv3x3_fwd, x, w, y, B, C, H, W);
}
void dwconv3x3_bwd_data(const double* w, const double* dy, double* dx, int B, int C, int H, int W) {
  IFNAS_DISPATCH(dwconv3x3_bwd_data, w, dy, dx, B, C, H, W);
}
void dwconv3x3_bwd_weight(const double* x, const double* dy, double* dw, int B, int C, int H, int W) {
  IFNAS_DISPATCH(dwconv3x3_bwd_weight, x, dy, dw, B, C, H, W);
}
void pwconv_fwd(const double* x, const double* w, const double* b, double* y,
                int B, int Ci, int Co, int H, int W, int stride) {
  IFNAS_DISPATCH(pwconv_fwd, x, w, b, y, B, Ci, Co, H, W, stride);
}
void pwconv_bwd_data(const double* w, const double* dy, double* dx,
                     int B, int Ci, int Co, int H, int W, int stride) {
  IFNAS_DISPATCH(pwconv_bwd_data, w, dy, dx, B, Ci, Co, H, W, stride);
}
void pwconv_bwd_weight(const double* x, const double* dy, double* dw, double* db,
                       int B, int Ci, int Co, int H, int W, int stride) {
  IFNAS_DISPATCH(pwconv_bwd_weight, x, dy, dw, db, B, Ci, Co, H, W, stride);
}
void linear_fwd(const double* x, const double* w, const double* b, double* y,
                int B, int Fi, int Fo) {
  IFNAS_DISPATCH(linear_fwd, x, w, b, y, B, Fi, Fo);
}
void linear_bwd_data(const double* w, const double* dy, double* dx, int B, int Fi, int Fo) {
  IFNAS_DISPATCH(linear_bwd_data, w, dy, dx, B, Fi, Fo);
}
void linear_bwd_weight(const double* x, const double* dy, double* dw, double* db,
                       int B, int Fi, int Fo) {
  IFNAS_DISPATCH(linear_bwd_weight, x, dy, dw, db, B, Fi, Fo);
}
void gap_fwd(const double* x, double* y, int B, int C, int H, int W) {
  IFNAS_DISPATCH(gap_fwd, x, y, B, C, H, W);
}
void gap_bwd(const double* dy, double* dx, int B, int C, int H, int W) {
  IFNAS_DISPATCH(gap_bwd, dy, dx, B, C, H, W);
}
void axpy(double s, const double* x, double* y, std::size_t n) { IFNAS_DISPATCH(axpy, s, x, y, n); }

#undef IFNAS_DISPATCH

}  // namespace ifnas::kernels
