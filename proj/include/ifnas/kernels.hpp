#pragma once

#include <cstddef>

namespace ifnas::kernels {

// Execution policy for the compute kernels. The parallel versions distribute
// disjoint output slices across threads and keep the per-output accumulation
// order identical to the serial reference, so results are bit-identical for
// any thread count. Tests assert exact equality between the two paths.
enum class Exec { Serial, Parallel };

// Thread-local so seed-sweep workers can force serial kernels without
// touching other runs.
Exec exec_policy();
void set_exec_policy(Exec e);

// ---------------------------------------------------------------------------
// Serial reference implementations. Kept permanently: they are the oracle the
// parallel kernels are tested against, and the fallback when OpenMP is off.
// ---------------------------------------------------------------------------
namespace serial {

void relu_fwd(const double* x, double* y, std::size_t n);
// dx += dy where x > 0
void relu_bwd(const double* x, const double* dy, double* dx, std::size_t n);

// Depthwise 3x3, stride 1, same padding. x,y: (B,C,H,W); w: (C,3,3).
void dwconv3x3_fwd(const double* x, const double* w, double* y, int B, int C, int H, int W);
void dwconv3x3_bwd_data(const double* w, const double* dy, double* dx, int B, int C, int H, int W);
void dwconv3x3_bwd_weight(const double* x, const double* dy, double* dw, int B, int C, int H, int W);

// Pointwise 1x1 with stride. x: (B,Ci,H,W); w: (Co,Ci); b: (Co) or null;
// y: (B,Co,Ho,Wo) with Ho = ceil(H/stride), Wo = ceil(W/stride).
void pwconv_fwd(const double* x, const double* w, const double* b, double* y,
                int B, int Ci, int Co, int H, int W, int stride);
void pwconv_bwd_data(const double* w, const double* dy, double* dx,
                     int B, int Ci, int Co, int H, int W, int stride);
void pwconv_bwd_weight(const double* x, const double* dy, double* dw, double* db,
                       int B, int Ci, int Co, int H, int W, int stride);

// Dense affine map. x: (B,Fi); w: (Fo,Fi); b: (Fo) or null; y: (B,Fo).
void linear_fwd(const double* x, const double* w, const double* b, double* y,
                int B, int Fi, int Fo);
void linear_bwd_data(const double* w, const double* dy, double* dx, int B, int Fi, int Fo);
void linear_bwd_weight(const double* x, const double* dy, double* dw, double* db,
                       int B, int Fi, int Fo);

// Global average pool. x: (B,C,H,W) -> y: (B,C).
void gap_fwd(const double* x, double* y, int B, int C, int H, int W);
void gap_bwd(const double* dy, double* dx, int B, int C, int H, int W);

// y += s * x
void axpy(double s, const double* x, double* y, std::size_t n);

}  // namespace serial

// ---------------------------------------------------------------------------
// OpenMP versions, same contracts. Compiled to the serial code when OpenMP is
// unavailable.
// ---------------------------------------------------------------------------
namespace par {

void relu_fwd(const double* x, double* y, std::size_t n);
void relu_bwd(const double* x, const double* dy, double* dx, std::size_t n);

void dwconv3x3_fwd(const double* x, const double* w, double* y, int B, int C, int H, int W);
void dwconv3x3_bwd_data(const double* w, const double* dy, double* dx, int B, int C, int H, int W);
void dwconv3x3_bwd_weight(const double* x, const double* dy, double* dw, int B, int C, int H, int W);

void pwconv_fwd(const double* x, const double* w, const double* b, double* y,
                int B, int Ci, int Co, int H, int W, int stride);
void pwconv_bwd_data(const double* w, const double* dy, double* dx,
                     int B, int Ci, int Co, int H, int W, int stride);
void pwconv_bwd_weight(const double* x, const double* dy, double* dw, double* db,
                       int B, int Ci, int Co, int H, int W, int stride);

void linear_fwd(const double* x, const double* w, const double* b, double* y,
                int B, int Fi, int Fo);
void linear_bwd_data(const double* w, const double* dy, double* dx, int B, int Fi, int Fo);
void linear_bwd_weight(const double* x, const double* dy, double* dw, double* db,
                       int B, int Fi, int Fo);

void gap_fwd(const double* x, double* y, int B, int C, int H, int W);
void gap_bwd(const double* dy, double* dx, int B, int C, int H, int W);

void axpy(double s, const double* x, double* y, std::size_t n);

}  // namespace par

// ---------------------------------------------------------------------------
// Policy-dispatching entry points used by the autodiff layer.
// ---------------------------------------------------------------------------

void relu_fwd(const double* x, double* y, std::size_t n);
void relu_bwd(const double* x, const double* dy, double* dx, std::size_t n);
void dwconv3x3_fwd(const double* x, const double* w, double* y, int B, int C, int H, int W);
void dwconv3x3_bwd_data(const double* w, const double* dy, double* dx, int B, int C, int H, int W);
void dwconv3x3_bwd_weight(const double* x, const double* dy, double* dw, int B, int C, int H, int W);
void pwconv_fwd(const double* x, const double* w, const double* b, double* y,
                int B, int Ci, int Co, int H, int W, int stride);
void pwconv_bwd_data(const double* w, const double* dy, double* dx,
                     int B, int Ci, int Co, int H, int W, int stride);
void pwconv_bwd_weight(const double* x, const double* dy, double* dw, double* db,
                       int B, int Ci, int Co, int H, int W, int stride);
void linear_fwd(const double* x, const double* w, const double* b, double* y,
                int B, int Fi, int Fo);
void linear_bwd_data(const double* w, const double* dy, double* dx, int B, int Fi, int Fo);
void linear_bwd_weight(const double* x, const double* dy, double* dw, double* db,
                       int B, int Fi, int Fo);
void gap_fwd(const double* x, double* y, int B, int C, int H, int W);
void gap_bwd(const double* dy, double* dx, int B, int C, int H, int W);
void axpy(double s, const double* x, double* y, std::size_t n);

}  // namespace ifnas::kernels
