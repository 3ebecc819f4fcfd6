#include "sdelab/activation.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "sdelab/special.hpp"

namespace sdelab {
namespace {

double sigmoid(double z) {
    if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
    double e = std::exp(z);
    return e / (1.0 + e);
}

// log(1 + exp(z)) without overflow.
double softplus(double z) {
    if (z > 0.0) return z + std::log1p(std::exp(-z));
    return std::log1p(std::exp(z));
}

constexpr double kInvSqrt2Pi = 0.3989422804014326779;

} // namespace

double ActivationSpec::value(double z) const {
    switch (kind) {
        case ActivationKind::relu:
            return z > 0.0 ? z : 0.0;
        case ActivationKind::piecewise_linear:
            return alpha * (z > 0.0 ? z : 0.0) + beta * (z < 0.0 ? -z : 0.0);
        case ActivationKind::linear:
            return alpha * z + beta;
        case ActivationKind::smooth_relu:
            return (softplus(alpha * z) - std::numbers::ln2) / alpha;
        case ActivationKind::exotic:
            return exotic_phi(alpha, beta, z);
        case ActivationKind::tanh:
            return std::tanh(z);
        case ActivationKind::gelu:
            return z * normal_cdf(z);
        case ActivationKind::swish:
            return z * sigmoid(z);
    }
    return 0.0;
}

double ActivationSpec::deriv(double z) const {
    switch (kind) {
        case ActivationKind::relu:
            return z > 0.0 ? 1.0 : 0.0;
        case ActivationKind::piecewise_linear:
            return z > 0.0 ? alpha : (z < 0.0 ? -beta : 0.0);
        case ActivationKind::linear:
            return alpha;
        case ActivationKind::smooth_relu:
            return sigmoid(alpha * z);
        case ActivationKind::exotic:
            return exotic_g(alpha, beta, z);
        case ActivationKind::tanh: {
            double t = std::tanh(z);
            return 1.0 - t * t;
        }
        case ActivationKind::gelu:
            return normal_cdf(z) + z * kInvSqrt2Pi * std::exp(-0.5 * z * z);
        case ActivationKind::swish: {
            double s = sigmoid(z);
            return s * (1.0 + z * (1.0 - s));
        }
    }
    return 0.0;
}

bool ActivationSpec::hard_zero() const {
    if (kind == ActivationKind::relu) return true;
    if (kind == ActivationKind::piecewise_linear)
        return (alpha != 0.0) != (beta != 0.0);
    return false;
}

std::string ActivationSpec::name() const {
    std::ostringstream os;
    switch (kind) {
        case ActivationKind::relu: return "relu";
        case ActivationKind::piecewise_linear:
            os << "piecewise:" << alpha << ":" << beta; return os.str();
        case ActivationKind::linear:
            os << "linear:" << alpha << ":" << beta; return os.str();
        case ActivationKind::smooth_relu:
            os << "smooth_relu:" << alpha; return os.str();
        case ActivationKind::exotic:
            os << "exotic:" << alpha << ":" << beta; return os.str();
        case ActivationKind::tanh: return "tanh";
        case ActivationKind::gelu: return "gelu";
        case ActivationKind::swish: return "swish";
    }
    return "?";
}

ActivationSpec parse_activation(std::string_view text) {
    std::string s(text);
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        std::size_t c = s.find(':', pos);
        parts.push_back(s.substr(pos, c - pos));
        if (c == std::string::npos) break;
        pos = c + 1;
    }
    auto num = [&](std::size_t i) {
        if (i >= parts.size()) throw std::invalid_argument("activation '" + s + "': missing parameter");
        try {
            std::size_t used = 0;
            double v = std::stod(parts[i], &used);
            if (used != parts[i].size()) throw std::invalid_argument("");
            return v;
        } catch (...) {
            throw std::invalid_argument("activation '" + s + "': bad parameter '" + parts[i] + "'");
        }
    };
    const std::string& k = parts[0];
    auto want = [&](std::size_t n) {
        if (parts.size() != n)
            throw std::invalid_argument("activation '" + s + "': wrong parameter count");
    };
    if (k == "relu") { want(1); return ActivationSpec::relu(); }
    if (k == "identity") { want(1); return ActivationSpec::identity(); }
    if (k == "piecewise") { want(3); return ActivationSpec::piecewise(num(1), num(2)); }
    if (k == "linear") { want(3); return ActivationSpec::linear(num(1), num(2)); }
    if (k == "smooth_relu") {
        want(2);
        double m = num(1);
        if (!(m > 0.0)) throw std::invalid_argument("smooth_relu: m must be > 0");
        return ActivationSpec::smooth_relu(m);
    }
    if (k == "exotic") { want(3); return ActivationSpec::exotic(num(1), num(2)); }
    if (k == "tanh") { want(1); return ActivationSpec::tanh(); }
    if (k == "gelu") { want(1); return ActivationSpec::gelu(); }
    if (k == "swish") { want(1); return ActivationSpec::swish(); }
    throw std::invalid_argument("unknown activation '" + s + "'");
}

void ActivationSpec::apply(std::span<const double> in, std::span<double> out) const {
    for (std::size_t i = 0; i < in.size(); ++i) out[i] = value(in[i]);
}

std::vector<double> ActivationSpec::apply(const std::vector<double>& v) const {
    std::vector<double> out(v.size());
    apply(v, out);
    return out;
}

double exotic_phi(double alpha, double beta, double y) {
    double z = erfi_inv(alpha * y + beta);
    return std::exp(z * z);
}

double exotic_g(double alpha, double beta, double y) {
    return alpha * std::sqrt(std::numbers::pi) * erfi_inv(alpha * y + beta);
}

double gbm_transform_g(double alpha, double beta, double gamma, double y) {
    double base = alpha * y + beta;
    if (!(base > 0.0)) throw std::domain_error("gbm_transform_g: alpha*y + beta must be > 0");
    return std::pow(base, gamma);
}

} // namespace sdelab
