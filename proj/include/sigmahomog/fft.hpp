#pragma once

#include <complex>
#include <vector>

namespace sigmah::fft {

// 2D complex DFT on an n x n array, row-major (index = iy*n + ix).
// sign -1 = forward, +1 = backward (unnormalized, FFTW convention).
// Plans are cached per (n, sign); creation is serialized, execution is
// re-entrant.
void dft2(int n, const std::complex<double>* in, std::complex<double>* out, int sign);

// Batched 1D real-to-real transform: `howmany` contiguous transforms of
// logical size `n`, element stride `stride`, distance `dist` between
// consecutive transforms. `kind` is an FFTW r2r kind constant (see fftw3.h);
// we pass it as int to keep fftw out of this header.
void r2r_many(int kind, int n, int howmany, const double* in, int istride, int idist,
              double* out, int ostride, int odist);

// FFTW r2r kind values mirrored so callers need not include fftw3.h.
// Checked against the real constants in fft.cpp at compile time.
inline constexpr int kDST1 = 7;   // RODFT00
inline constexpr int kDST2 = 9;   // RODFT10
inline constexpr int kDST3 = 10;  // RODFT01
inline constexpr int kDCT2 = 5;   // REDFT10
inline constexpr int kDCT3 = 4;   // REDFT01

}  // namespace sigmah::fft
