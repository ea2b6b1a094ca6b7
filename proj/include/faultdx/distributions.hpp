#ifndef FAULTDX_DISTRIBUTIONS_HPP
#define FAULTDX_DISTRIBUTIONS_HPP

#include <cmath>
#include <string>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/fisher_f.hpp>
#include <boost/math/distributions/normal.hpp>
#include <boost/math/distributions/students_t.hpp>

#include "core.hpp"

// Upper-tail probabilities for the reference distributions used by the tests.
// The incomplete gamma/beta work is delegated to Boost.Math.

namespace faultdx {

enum class Distribution { chi_squared, f, student_t };

struct DistParams {
    double df1 = 1.0;
    double df2 = 1.0;  ///< F only
};

inline double dist_sf(Distribution kind, double x, DistParams params) {
    require(std::isfinite(params.df1) && params.df1 > 0.0, ErrorCode::InvalidParams, "degrees of freedom must be positive");
    require(!std::isnan(x), ErrorCode::InvalidParams, "statistic is NaN");
    switch (kind) {
        case Distribution::chi_squared: {
            if (x <= 0.0) return 1.0;
            if (std::isinf(x)) return 0.0;
            return boost::math::cdf(boost::math::complement(boost::math::chi_squared_distribution<double>(params.df1), x));
        }
        case Distribution::f: {
            require(std::isfinite(params.df2) && params.df2 > 0.0, ErrorCode::InvalidParams, "degrees of freedom must be positive");
            if (x <= 0.0) return 1.0;
            if (std::isinf(x)) return 0.0;
            return boost::math::cdf(boost::math::complement(boost::math::fisher_f_distribution<double>(params.df1, params.df2), x));
        }
        case Distribution::student_t: {
            if (std::isinf(x)) return x > 0 ? 0.0 : 1.0;
            return boost::math::cdf(boost::math::complement(boost::math::students_t_distribution<double>(params.df1), x));
        }
    }
    throw Error(ErrorCode::InvalidParams, "unknown distribution");
}

inline double chi2_sf(double x, double df) { return dist_sf(Distribution::chi_squared, x, {df, 1.0}); }
inline double f_sf(double x, double df1, double df2) { return dist_sf(Distribution::f, x, {df1, df2}); }
inline double t_sf(double x, double df) { return dist_sf(Distribution::student_t, x, {df, 1.0}); }

inline double normal_quantile(double p) {
    return boost::math::quantile(boost::math::normal_distribution<double>(0.0, 1.0), p);
}

inline double normal_sf(double x, double mean = 0.0, double sd = 1.0) {
    return boost::math::cdf(boost::math::complement(boost::math::normal_distribution<double>(mean, sd), x));
}

}  // namespace faultdx

#endif
