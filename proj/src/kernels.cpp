#include "cremona/kernels.hpp"

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cremona {

int parallel_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace {

void bareiss_row(Matrix<Polynomial>& m, std::size_t k, std::size_t i, const Polynomial& prev) {
    const std::size_t n = m.cols();
    for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = exact_div(v, prev);
    }
    m(i, k) = Polynomial();
}

// Exceptions must not cross an OpenMP region boundary; keep the first one
// and rethrow after the loop.
class ErrorSlot {
public:
    template <typename Fn>
    void run(Fn&& fn) {
        try {
            fn();
        } catch (...) {
#pragma omp critical(cremona_error_slot)
            if (!error_) error_ = std::current_exception();
        }
    }
    void rethrow() const {
        if (error_) std::rethrow_exception(error_);
    }

private:
    std::exception_ptr error_;
};

} // namespace

void bareiss_step(Matrix<Polynomial>& m, std::size_t k, const Polynomial& prev, Exec exec) {
    const auto rows = static_cast<long>(m.rows());
    const auto first = static_cast<long>(k) + 1;
    if (exec == Exec::serial) {
        for (long i = first; i < rows; ++i) bareiss_row(m, k, static_cast<std::size_t>(i), prev);
        return;
    }
    ErrorSlot err;
#pragma omp parallel for schedule(dynamic)
    for (long i = first; i < rows; ++i) err.run([&] { bareiss_row(m, k, static_cast<std::size_t>(i), prev); });
    err.rethrow();
}

std::vector<char> map_indices(std::size_t count, const std::function<bool(std::size_t)>& pred, Exec exec) {
    std::vector<char> flags(count, 0);
    const auto n = static_cast<long>(count);
    if (exec == Exec::serial) {
        for (long i = 0; i < n; ++i) flags[static_cast<std::size_t>(i)] = pred(static_cast<std::size_t>(i)) ? 1 : 0;
        return flags;
    }
    ErrorSlot err;
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i)
        err.run([&] { flags[static_cast<std::size_t>(i)] = pred(static_cast<std::size_t>(i)) ? 1 : 0; });
    err.rethrow();
    return flags;
}

} // namespace cremona
