#ifndef ECSMET_FOCK_KERNELS_HPP
#define ECSMET_FOCK_KERNELS_HPP

// Dense kernels on the flattened two-mode number basis. The heavy kernels
// come in two spellings: a plain serial reference (suffix _serial) kept for
// testing, and a default entry point running the same loop under OpenMP when
// it is available. Each output block is written by exactly one thread and
// the per-block accumulation order is fixed, so both spellings agree bit for
// bit for any thread count.

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <vector>

#include "ecsmet/fock/fock.hpp"

namespace ecsmet::fock {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

// w(k, m) = sqrt(binom(m+k, k) T^m R^k), valid for m + k <= truncation.
// One-mode loss acts as rho'(m, m') = sum_k w(k,m) w(k,m') rho(m+k, m'+k),
// which the kernels below organize as scaled block adds.
Eigen::MatrixXd loss_weights(int truncation, double rate);

namespace detail {

template <class S>
inline void loss_block(const Mat<S>& in, Mat<S>& out, const Eigen::MatrixXd& w,
                       int m1, int ma, int mp) {
    auto dst = out.block(ma * m1, mp * m1, m1, m1);
    const int kmax = (m1 - 1) - std::max(ma, mp);
    for (int k = 0; k <= kmax; ++k) {
        const double c = w(k, ma) * w(k, mp);
        if (c != 0.0)
            dst.noalias() += c * in.block((ma + k) * m1, (mp + k) * m1, m1, m1);
    }
}

} // namespace detail

template <class S>
Mat<S> loss_mode_a_serial(const Mat<S>& in, int truncation, double rate) {
    const int m1 = mode_dim(truncation);
    const Eigen::MatrixXd w = loss_weights(truncation, rate);
    Mat<S> out = Mat<S>::Zero(in.rows(), in.cols());
    for (int ma = 0; ma < m1; ++ma)
        for (int mp = 0; mp < m1; ++mp)
            detail::loss_block(in, out, w, m1, ma, mp);
    return out;
}

template <class S>
Mat<S> loss_mode_a(const Mat<S>& in, int truncation, double rate) {
    const int m1 = mode_dim(truncation);
    const Eigen::MatrixXd w = loss_weights(truncation, rate);
    Mat<S> out = Mat<S>::Zero(in.rows(), in.cols());
#ifdef _OPENMP
#pragma omp parallel for collapse(2) schedule(static)
#endif
    for (int ma = 0; ma < m1; ++ma)
        for (int mp = 0; mp < m1; ++mp)
            detail::loss_block(in, out, w, m1, ma, mp);
    return out;
}

// Relabels (n_a, n_b) -> (n_b, n_a) on both sides; loss on mode b is
// swap . loss_mode_a . swap.
template <class S>
Mat<S> mode_swap(const Mat<S>& in, int truncation) {
    const int m1 = mode_dim(truncation);
    Mat<S> out(in.rows(), in.cols());
    for (int na = 0; na < m1; ++na)
        for (int nb = 0; nb < m1; ++nb) {
            const int r = na * m1 + nb;
            const int rs = nb * m1 + na;
            for (int np = 0; np < m1; ++np)
                for (int nq = 0; nq < m1; ++nq)
                    out(r, np * m1 + nq) = in(rs, nq * m1 + np);
        }
    return out;
}

template <class S>
Mat<S> loss_mode_b_serial(const Mat<S>& in, int truncation, double rate) {
    return mode_swap<S>(loss_mode_a_serial<S>(mode_swap<S>(in, truncation),
                                              truncation, rate),
                        truncation);
}

template <class S>
Mat<S> loss_mode_b(const Mat<S>& in, int truncation, double rate) {
    return mode_swap<S>(
        loss_mode_a<S>(mode_swap<S>(in, truncation), truncation, rate),
        truncation);
}

// Transpose on the mode-a index only: out[(na,nb),(na',nb')] =
// in[(na',nb),(na,nb')], i.e. a transpose of the block grid.
template <class S>
Mat<S> partial_transpose_a_serial(const Mat<S>& in, int truncation) {
    const int m1 = mode_dim(truncation);
    Mat<S> out(in.rows(), in.cols());
    for (int na = 0; na < m1; ++na)
        for (int np = 0; np < m1; ++np)
            out.block(na * m1, np * m1, m1, m1) =
                in.block(np * m1, na * m1, m1, m1);
    return out;
}

template <class S>
Mat<S> partial_transpose_a(const Mat<S>& in, int truncation) {
    const int m1 = mode_dim(truncation);
    Mat<S> out(in.rows(), in.cols());
#ifdef _OPENMP
#pragma omp parallel for collapse(2) schedule(static)
#endif
    for (int na = 0; na < m1; ++na)
        for (int np = 0; np < m1; ++np)
            out.block(na * m1, np * m1, m1, m1) =
                in.block(np * m1, na * m1, m1, m1);
    return out;
}

// rho(phi) = e^{-i phi n_a} rho e^{+i phi n_a}; the generator convention is
// d rho / d phi = -i [n_a, rho].
Eigen::MatrixXcd phase_rotate(const Eigen::MatrixXcd& in, int truncation,
                              double phi);
Eigen::MatrixXcd phase_rotate(const Eigen::MatrixXd& in, int truncation,
                              double phi);

// Balanced splitter exp((pi/4)(a b+ - a+ b)) built block by block on the
// total-photon-number decomposition; each block is real orthogonal and
// exact within the cutoff for total <= truncation.
class BeamSplitter {
public:
    explicit BeamSplitter(int truncation);

    int truncation() const { return nc_; }
    const Eigen::MatrixXd& block(int total) const { return blocks_[total]; }

    Eigen::VectorXcd apply_serial(const Eigen::VectorXcd& psi) const;
    Eigen::VectorXcd apply(const Eigen::VectorXcd& psi) const;

private:
    int nc_ = 0;
    std::vector<Eigen::MatrixXd> blocks_;
};

// Convenience wrapper constructing the splitter for one application.
FockVector beam_splitter_50_50(const FockVector& psi);

} // namespace ecsmet::fock

#endif // ECSMET_FOCK_KERNELS_HPP
