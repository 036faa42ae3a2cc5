// Copyright 2026 The Graspkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "graspkit/loss.hpp"

#include <cmath>

namespace graspkit {
namespace {

/// Kahan-compensated accumulator: reduction order independence to 1e-12.
class Accumulator {
 public:
  void add(double x) {
    const double y = x - c_;
    const double t = sum_ + y;
    c_ = (t - sum_) - y;
    sum_ = t;
  }
  double sum() const { return sum_; }

 private:
  double sum_ = 0.0;
  double c_ = 0.0;
};

bool include_negative(const LossOptions& opts, int u, int v) {
  if (opts.negative_fraction >= 1.0) return true;
  if (opts.negative_fraction <= 0.0) return false;
  const std::uint64_t h = mix_seed(opts.negative_seed, static_cast<std::uint64_t>(u),
                                   static_cast<std::uint64_t>(v));
  return static_cast<double>(h >> 11) * 0x1.0p-53 < opts.negative_fraction;
}

double sign(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

struct Supervision {
  std::vector<const GraspMapEntry*> entries;
  std::vector<std::pair<int, int>> negatives;  // (u, v) of mask-0 pixels
  int positive_count = 0;
};

Supervision collect(const SparseGraspMap& target, const LossOptions& opts) {
  Supervision s;
  s.entries.reserve(target.entries.size());
  for (const auto& e : target.entries) {
    s.entries.push_back(&e);
    if (e.quality == 1) ++s.positive_count;
  }
  for (int v = 0; v < target.height; ++v) {
    for (int u = 0; u < target.width; ++u) {
      if (target.mask.at(u, v) == 0 && include_negative(opts, u, v)) {
        s.negatives.emplace_back(u, v);
      }
    }
  }
  return s;
}

double bce(double p, int q, double clamp) {
  p = std::clamp(p, clamp, 1.0 - clamp);
  return q == 1 ? -std::log(p) : -std::log(1.0 - p);
}

LossBreakdown loss_impl(const Tensor& pred, const SparseGraspMap& target,
                        const CameraIntrinsics* intrinsics, const LossOptions& opts,
                        bool tcp_variant) {
  if (pred.height() != target.height || pred.width() != target.width) {
    throw std::invalid_argument("loss: prediction/target dimension mismatch");
  }
  const int want_channels = tcp_variant ? kTcpOutputChannels : kOutputChannels;
  if (pred.channels() != want_channels) {
    throw std::invalid_argument("loss: wrong channel count");
  }

  const Supervision sup = collect(target, opts);
  const std::size_t n_sup = sup.entries.size() + sup.negatives.size();

  LossBreakdown out;
  out.positive_count = sup.positive_count;

  Accumulator acc_q, acc_r, acc_w, acc_z;
  for (const auto* e : sup.entries) {
    acc_q.add(bce(pred.at(channel::kQuality, e->v, e->u), e->quality, opts.bce_clamp));
    if (e->quality != 1) continue;
    const Quat raw = tensor_quaternion(pred, e->v, e->u);
    const double norm = raw.norm();
    if (norm < 1e-12) {
      acc_r.add(1.0);
    } else {
      const double dot = (raw.w() * e->rotation.w() + raw.x() * e->rotation.x() +
                          raw.y() * e->rotation.y() + raw.z() * e->rotation.z()) /
                         norm;
      acc_r.add(1.0 - std::abs(dot));
    }
    acc_w.add(std::abs(pred.at(channel::kWidth, e->v, e->u) - e->width));
    if (tcp_variant) {
      const double z_gt = tcp_depth_offset(*e, *intrinsics);
      acc_z.add(std::abs(pred.at(channel::kTcpOffset, e->v, e->u) - z_gt));
    }
  }
  for (const auto& [u, v] : sup.negatives) {
    acc_q.add(bce(pred.at(channel::kQuality, v, u), 0, opts.bce_clamp));
  }

  out.l_q = n_sup > 0 ? acc_q.sum() / static_cast<double>(n_sup) : 0.0;
  if (sup.positive_count > 0) {
    out.l_r = acc_r.sum() / sup.positive_count;
    out.l_w = acc_w.sum() / sup.positive_count;
    if (tcp_variant) out.l_z = acc_z.sum() / sup.positive_count;
  }
  out.total = out.l_q + opts.alpha * out.l_r + opts.beta * out.l_w +
              (tcp_variant ? opts.nu * out.l_z : 0.0);
  return out;
}

Tensor gradient_impl(const Tensor& pred, const SparseGraspMap& target,
                     const CameraIntrinsics* intrinsics, const LossOptions& opts,
                     bool tcp_variant) {
  if (pred.height() != target.height || pred.width() != target.width) {
    throw std::invalid_argument("loss gradient: dimension mismatch");
  }
  const Supervision sup = collect(target, opts);
  const double n_sup = static_cast<double>(sup.entries.size() + sup.negatives.size());
  const double n_pos = static_cast<double>(sup.positive_count);

  Tensor grad(pred.channels(), pred.height(), pred.width());

  auto bce_grad = [&](double p, int q) {
    if (p < opts.bce_clamp || p > 1.0 - opts.bce_clamp) return 0.0;  // clamped: flat
    return (p - q) / (p * (1.0 - p)) / n_sup;
  };

  for (const auto* e : sup.entries) {
    grad.at(channel::kQuality, e->v, e->u) =
        bce_grad(pred.at(channel::kQuality, e->v, e->u), e->quality);
    if (e->quality != 1) continue;

    const Quat raw = tensor_quaternion(pred, e->v, e->u);
    const Eigen::Vector4d v(raw.w(), raw.x(), raw.y(), raw.z());
    const Eigen::Vector4d r(e->rotation.w(), e->rotation.x(), e->rotation.y(),
                            e->rotation.z());
    const double m = v.norm();
    if (m > 1e-12) {
      const Eigen::Vector4d v_hat = v / m;
      const double s = r.dot(v_hat);
      const Eigen::Vector4d g = -sign(s) * (r - s * v_hat) / m * (opts.alpha / n_pos);
      grad.at(channel::kQuatW, e->v, e->u) = g[0];
      grad.at(channel::kQuatX, e->v, e->u) = g[1];
      grad.at(channel::kQuatY, e->v, e->u) = g[2];
      grad.at(channel::kQuatZ, e->v, e->u) = g[3];
    }
    grad.at(channel::kWidth, e->v, e->u) =
        opts.beta / n_pos * sign(pred.at(channel::kWidth, e->v, e->u) - e->width);
    if (tcp_variant) {
      const double z_gt = tcp_depth_offset(*e, *intrinsics);
      grad.at(channel::kTcpOffset, e->v, e->u) =
          opts.nu / n_pos * sign(pred.at(channel::kTcpOffset, e->v, e->u) - z_gt);
    }
  }
  for (const auto& [u, v] : sup.negatives) {
    grad.at(channel::kQuality, v, u) = bce_grad(pred.at(channel::kQuality, v, u), 0);
  }
  return grad;
}

}  // namespace

double quaternion_distance(const Quat& r, const Quat& r_hat) {
  if (!is_unit_quaternion(r) || !is_unit_quaternion(r_hat)) {
    throw std::invalid_argument("quaternion_distance: inputs must be unit quaternions");
  }
  const double dot = r.w() * r_hat.w() + r.x() * r_hat.x() + r.y() * r_hat.y() +
                     r.z() * r_hat.z();
  return 1.0 - std::abs(dot);
}

double tcp_depth_offset(const GraspMapEntry& entry, const CameraIntrinsics& intrinsics) {
  const Vec3 ray = pixel_ray(intrinsics, entry.u, entry.v);
  const Vec3 x_axis = entry.rotation * Vec3(1, 0, 0);
  return 0.5 * entry.width * x_axis.dot(ray);
}

LossBreakdown loss_contact(const Tensor& pred, const SparseGraspMap& target,
                           const LossOptions& opts) {
  return loss_impl(pred, target, nullptr, opts, false);
}

LossBreakdown loss_tcp(const Tensor& pred, const SparseGraspMap& target,
                       const CameraIntrinsics& intrinsics, const LossOptions& opts) {
  return loss_impl(pred, target, &intrinsics, opts, true);
}

Tensor loss_contact_gradient(const Tensor& pred, const SparseGraspMap& target,
                             const LossOptions& opts) {
  return gradient_impl(pred, target, nullptr, opts, false);
}

Tensor loss_tcp_gradient(const Tensor& pred, const SparseGraspMap& target,
                         const CameraIntrinsics& intrinsics, const LossOptions& opts) {
  return gradient_impl(pred, target, &intrinsics, opts, true);
}

}  // namespace graspkit
