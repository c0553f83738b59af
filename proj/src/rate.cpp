#include "picklab/rate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace picklab {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::OverlappingDensitySupports: return "OverlappingDensitySupports";
    case ErrorCode::NonIntegrableDensityExponent: return "NonIntegrableDensityExponent";
    case ErrorCode::UnsupportedIntegrand: return "UnsupportedIntegrand";
    case ErrorCode::CenterMismatch: return "CenterMismatch";
    case ErrorCode::NonUpperHalfPlaneArgument: return "NonUpperHalfPlaneArgument";
    case ErrorCode::SupportViolation: return "SupportViolation";
    case ErrorCode::NotRegularToOrder: return "NotRegularToOrder";
    case ErrorCode::UnsupportedRep: return "UnsupportedRep";
    case ErrorCode::GammaNotAdmissible: return "GammaNotAdmissible";
    case ErrorCode::LambdaNotLittleO: return "LambdaNotLittleO";
    case ErrorCode::HypothesisFailure: return "HypothesisFailure";
    case ErrorCode::MomentDivergent: return "MomentDivergent";
    case ErrorCode::DegenerateArc: return "DegenerateArc";
    case ErrorCode::AssertionFailure: return "AssertionFailure";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::IncomparableRates: return "IncomparableRates";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

const char* tag_name(Tag t) {
  switch (t) {
    case Tag::Integrable: return "Integrable";
    case Tag::Divergent: return "Divergent";
    case Tag::Inconclusive: return "Inconclusive";
  }
  return "?";
}

const char* scan_verdict_name(ScanVerdict v) {
  switch (v) {
    case ScanVerdict::Bounded: return "Bounded";
    case ScanVerdict::Unbounded: return "Unbounded";
    case ScanVerdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

bool AsymClass::decays_faster_than(const AsymClass& other) const {
  if (expinv_rate != other.expinv_rate) return expinv_rate > other.expinv_rate;
  if (power != other.power) return power > other.power;
  return log_power < other.log_power;
}

bool AsymClass::same_shape(const AsymClass& other) const {
  return expinv_rate == other.expinv_rate && power == other.power &&
         log_power == other.log_power;
}

namespace {
constexpr double kLn2 = 0.6931471805599453;
}

struct RateFunction::Node {
  enum Kind { Power, ExpInv, PowerLog, Scale, Min, Tabulated } kind;
  double c = 0, p = 0, q = 0, k = 0, s = 0;
  std::shared_ptr<const Node> a, b;
  std::vector<double> tab_t, tab_v;
  bool tab_little_o = false;

  double value(double t) const {
    switch (kind) {
      case Power:
        return t <= 0 ? 0.0 : c * std::pow(t, p);
      case ExpInv:
        return t <= 0 ? 0.0 : std::exp(-k / t);
      case PowerLog: {
        // c * t^p * ln(e/t)^q with the log factor frozen at 1 for t >= 1;
        // monotone on (0,1] whenever q <= p (rejected at construction otherwise).
        if (t <= 0) return 0.0;
        if (t >= 1) return c * std::pow(t, p);
        return c * std::pow(t, p) * std::pow(1.0 + std::log(1.0 / t), q);
      }
      case Scale:
        return a->value(s * t);
      case Min:
        return std::min(a->value(t), b->value(t));
      case Tabulated: {
        if (t <= 0) return 0.0;
        if (t <= tab_t.front()) return tab_v.front() * (t / tab_t.front());
        if (t >= tab_t.back()) return tab_v.back();
        auto it = std::upper_bound(tab_t.begin(), tab_t.end(), t);
        size_t i = static_cast<size_t>(it - tab_t.begin());
        double t0 = tab_t[i - 1], t1 = tab_t[i];
        double w = (t - t0) / (t1 - t0);
        return tab_v[i - 1] * (1 - w) + tab_v[i] * w;
      }
    }
    return 0.0;
  }

  // log2 of value; -inf when the value is exactly 0.
  double log2_value(double t) const {
    if (t <= 0) return -std::numeric_limits<double>::infinity();
    switch (kind) {
      case Power:
        return std::log2(c) + p * std::log2(t);
      case ExpInv:
        return -(k / t) / kLn2;
      case PowerLog: {
        if (t >= 1) return std::log2(c) + p * std::log2(t);
        return std::log2(c) + p * std::log2(t) + q * std::log2(1.0 + std::log(1.0 / t));
      }
      case Scale:
        return a->log2_value(s * t);
      case Min:
        return std::min(a->log2_value(t), b->log2_value(t));
      case Tabulated: {
        double v = value(t);
        return v > 0 ? std::log2(v) : -std::numeric_limits<double>::infinity();
      }
    }
    return 0.0;
  }

  double derivative(double t) const {
    switch (kind) {
      case Power:
        return t <= 0 ? 0.0 : c * p * std::pow(t, p - 1.0);
      case ExpInv:
        return t <= 0 ? 0.0 : (k / (t * t)) * std::exp(-k / t);
      case PowerLog: {
        if (t <= 0) return 0.0;
        if (t >= 1) return c * p * std::pow(t, p - 1.0);
        double L = 1.0 + std::log(1.0 / t);
        return c * std::pow(t, p - 1.0) * std::pow(L, q - 1.0) * (p * L - q);
      }
      case Scale:
        return s * a->derivative(s * t);
      case Min:
        return a->value(t) <= b->value(t) ? a->derivative(t) : b->derivative(t);
      case Tabulated: {
        if (t <= 0) return 0.0;
        if (t <= tab_t.front()) return tab_v.front() / tab_t.front();
        if (t >= tab_t.back()) return 0.0;
        auto it = std::upper_bound(tab_t.begin(), tab_t.end(), t);
        size_t i = static_cast<size_t>(it - tab_t.begin());
        return (tab_v[i] - tab_v[i - 1]) / (tab_t[i] - tab_t[i - 1]);
      }
    }
    return 0.0;
  }

  bool symbolic() const {
    switch (kind) {
      case Tabulated: return false;
      case Scale: return a->symbolic();
      case Min: return a->symbolic() && b->symbolic();
      default: return true;
    }
  }

  AsymClass asym() const {
    switch (kind) {
      case Power: return {0.0, p, 0.0, c};
      case ExpInv: return {k, 0.0, 0.0, 1.0};
      case PowerLog: return {0.0, p, q, c};
      case Scale: {
        AsymClass in = a->asym();
        in.expinv_rate /= s;
        in.coef *= std::pow(s, in.power);
        return in;
      }
      case Min: {
        AsymClass ca = a->asym(), cb = b->asym();
        if (ca.decays_faster_than(cb)) return ca;
        if (cb.decays_faster_than(ca)) return cb;
        return ca.coef <= cb.coef ? ca : cb;
      }
      case Tabulated:
        throw Error(ErrorCode::IncomparableRates,
                    "tabulated rate has no symbolic asymptotic class");
    }
    return {};
  }
};

RateFunction::RateFunction(std::shared_ptr<const Node> n) : node_(std::move(n)) { validate(); }

RateFunction RateFunction::power(double c, double p) {
  if (!(c > 0) || !(p > 0))
    throw Error(ErrorCode::InvalidArgument, "power rate requires c > 0, p > 0");
  auto n = std::make_shared<Node>();
  n->kind = Node::Power; n->c = c; n->p = p;
  return RateFunction(n);
}

RateFunction RateFunction::expinv(double k) {
  if (!(k > 0)) throw Error(ErrorCode::InvalidArgument, "expinv rate requires k > 0");
  auto n = std::make_shared<Node>();
  n->kind = Node::ExpInv; n->k = k;
  return RateFunction(n);
}

RateFunction RateFunction::powerlog(double c, double p, double q) {
  if (!(c > 0) || !(p > 0))
    throw Error(ErrorCode::InvalidArgument, "powerlog rate requires c > 0, p > 0");
  auto n = std::make_shared<Node>();
  n->kind = Node::PowerLog; n->c = c; n->p = p; n->q = q;
  return RateFunction(n);
}

RateFunction RateFunction::scale(double s, RateFunction inner) {
  if (!(s > 0)) throw Error(ErrorCode::InvalidArgument, "scale factor must be positive");
  auto n = std::make_shared<Node>();
  n->kind = Node::Scale; n->s = s; n->a = inner.node_;
  return RateFunction(n);
}

RateFunction RateFunction::min_of(RateFunction a, RateFunction b) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Min; n->a = a.node_; n->b = b.node_;
  return RateFunction(n);
}

RateFunction RateFunction::tabulated(std::vector<double> t, std::vector<double> v,
                                     bool empirically_little_o_of_t) {
  if (t.size() != v.size() || t.empty())
    throw Error(ErrorCode::InvalidArgument, "tabulation needs matching nonempty grids");
  for (size_t i = 0; i < t.size(); ++i) {
    if (!(t[i] > 0) || v[i] < 0)
      throw Error(ErrorCode::InvalidArgument, "tabulation needs t > 0 and v >= 0");
    if (i > 0 && (t[i] <= t[i - 1] || v[i] < v[i - 1]))
      throw Error(ErrorCode::InvalidArgument, "tabulation must be strictly increasing in t and monotone in v");
  }
  auto n = std::make_shared<Node>();
  n->kind = Node::Tabulated;
  n->tab_t = std::move(t);
  n->tab_v = std::move(v);
  n->tab_little_o = empirically_little_o_of_t;
  return RateFunction(n);
}

void RateFunction::validate() const {
  if (node_->kind == Node::Tabulated) return;  // monotone by construction above
  // 64-point log grid in [1e-6, 1]: monotonicity and derivative consistency.
  // The finite-difference probe stops short of t = 1, where the frozen log
  // factor of PowerLog has a kink.
  double prev = 0.0;
  for (int i = 0; i < 64; ++i) {
    double t = std::pow(10.0, -6.0 + 6.0 * i / 63.0);
    double v = node_->value(t);
    if (v + 1e-15 < prev)
      throw Error(ErrorCode::InvalidArgument, "rate function not monotone on validation grid");
    prev = std::max(prev, v);
    if (node_->kind == Node::Min) continue;  // branches were FD-checked at their own construction
    double tf = std::min(t, 0.98);
    double d = node_->derivative(tf);
    double h = tf * 1e-5;
    double fd = (node_->value(tf + h) - node_->value(tf - h)) / (2 * h);
    if (std::abs(d - fd) > 1e-6 * (1.0 + std::abs(d)))
      throw Error(ErrorCode::InvalidArgument, "rate derivative inconsistent with finite differences");
  }
}

double RateFunction::value(double t) const { return node_->value(t); }
double RateFunction::log2_value(double t) const { return node_->log2_value(t); }
double RateFunction::derivative(double t) const { return node_->derivative(t); }
bool RateFunction::is_symbolic() const { return node_->symbolic(); }
AsymClass RateFunction::asym() const { return node_->asym(); }

bool RateFunction::is_o_of(const RateFunction& other) const {
  return asym().decays_faster_than(other.asym());
}

bool RateFunction::is_O_of(const RateFunction& other) const {
  AsymClass mine = asym(), theirs = other.asym();
  return mine.decays_faster_than(theirs) || mine.same_shape(theirs);
}

bool RateFunction::is_little_o_of_t() const {
  if (!is_symbolic()) return node_->tab_little_o;
  AsymClass t1{0.0, 1.0, 0.0, 1.0};
  return asym().decays_faster_than(t1);
}

AsymClass RateFunction::sqrt_asym() const {
  AsymClass c = asym();
  return {c.expinv_rate / 2.0, c.power / 2.0, c.log_power / 2.0, std::sqrt(c.coef)};
}

std::string RateFunction::describe() const {
  std::ostringstream os;
  switch (node_->kind) {
    case Node::Power: os << node_->c << "*t^" << node_->p; break;
    case Node::ExpInv: os << "exp(-" << node_->k << "/t)"; break;
    case Node::PowerLog: os << node_->c << "*t^" << node_->p << "*ln(1/t)^" << node_->q; break;
    case Node::Scale: os << "scale(" << node_->s << ", " << RateFunction(node_->a).describe() << ")"; break;
    case Node::Min:
      os << "min(" << RateFunction(node_->a).describe() << ", "
         << RateFunction(node_->b).describe() << ")";
      break;
    case Node::Tabulated: os << "tabulated[" << node_->tab_t.size() << "]"; break;
  }
  return os.str();
}

}  // namespace picklab
