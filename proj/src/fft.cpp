#include "sigmahomog/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>

namespace sigmah::fft {

static_assert(kDST1 == FFTW_RODFT00);
static_assert(kDST2 == FFTW_RODFT10);
static_assert(kDST3 == FFTW_RODFT01);
static_assert(kDCT2 == FFTW_REDFT10);
static_assert(kDCT3 == FFTW_REDFT01);

namespace {

// Plans are created once per geometry with FFTW_UNALIGNED so they can execute
// on any caller-owned buffer. Creation must be serialized (FFTW planner is
// not thread safe); fftw_execute_* on distinct arrays is.
std::mutex g_planner_mutex;

fftw_plan dft2_plan(int n, int sign) {
    static std::map<std::pair<int, int>, fftw_plan> cache;
    std::lock_guard<std::mutex> lock(g_planner_mutex);
    auto key = std::make_pair(n, sign);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<std::complex<double>> scratch(static_cast<size_t>(n) * n);
    auto* p = reinterpret_cast<fftw_complex*>(scratch.data());
    fftw_plan plan = fftw_plan_dft_2d(n, n, p, p, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    cache.emplace(key, plan);
    return plan;
}

fftw_plan r2r_plan(int kind, int n, int howmany, int istride, int idist, int ostride,
                   int odist) {
    using Key = std::tuple<int, int, int, int, int, int, int>;
    static std::map<Key, fftw_plan> cache;
    std::lock_guard<std::mutex> lock(g_planner_mutex);
    Key key{kind, n, howmany, istride, idist, ostride, odist};
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    size_t span = static_cast<size_t>(howmany - 1) * idist + static_cast<size_t>(n - 1) * istride + 1;
    size_t ospan = static_cast<size_t>(howmany - 1) * odist + static_cast<size_t>(n - 1) * ostride + 1;
    std::vector<double> si(span), so(ospan);
    auto k = static_cast<fftw_r2r_kind>(kind);
    fftw_plan plan = fftw_plan_many_r2r(1, &n, howmany, si.data(), nullptr, istride, idist,
                                        so.data(), nullptr, ostride, odist, &k,
                                        FFTW_ESTIMATE | FFTW_UNALIGNED);
    cache.emplace(key, plan);
    return plan;
}

}  // namespace

void dft2(int n, const std::complex<double>* in, std::complex<double>* out, int sign) {
    fftw_plan plan = dft2_plan(n, sign);
    fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in)),
                     reinterpret_cast<fftw_complex*>(out));
}

void r2r_many(int kind, int n, int howmany, const double* in, int istride, int idist,
              double* out, int ostride, int odist) {
    fftw_plan plan = r2r_plan(kind, n, howmany, istride, idist, ostride, odist);
    fftw_execute_r2r(plan, const_cast<double*>(in), out);
}

}  // namespace sigmah::fft
