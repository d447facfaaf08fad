// Copyright 2026 The qheat developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "core/kdq.hpp"

#include <stdexcept>

#include "core/gates.hpp"

namespace qheat {

double KdqDistribution::sum() const {
    double s = 0.0;
    for (double e : entries) s += e;
    return s;
}

double KdqDistribution::initial_marginal(int i) const {
    double s = 0.0;
    for (int f = 0; f < 4; ++f) s += entry(i, f);
    return s;
}

KdqDistribution kdq_distribution(const QuantumState &rho, double theta) {
    if (rho.n_qubits() != 2)
        throw std::invalid_argument("kdq_distribution expects a two-qubit state");
    const Matrix r = rho.density();
    const Matrix u = u_theta(theta).matrix();
    KdqDistribution dist;
    dist.theta = theta;
    for (int i = 0; i < 4; ++i) {
        // Pi^i rho keeps row i of rho; Tr[U^dag Pi^f U Pi^i rho] picks the
        // (i, f) propagated matrix element.
        for (int f = 0; f < 4; ++f) {
            Complex val = 0.0;
            for (int a = 0; a < 4; ++a) val += std::conj(u(f, i)) * u(f, a) * r(i, a);
            dist.entries[static_cast<std::size_t>(4 * i + f)] = val.real();
        }
    }
    return dist;
}

HeatPair kdq_heat(const KdqDistribution &dist, double delta) {
    HeatPair q;
    for (int i = 0; i < 4; ++i)
        for (int f = 0; f < 4; ++f) {
            const double p = dist.entry(i, f);
            q.c += p * delta * ((i >> 1) - (f >> 1));
            q.h += p * delta * ((i & 1) - (f & 1));
        }
    return q;
}

double negativity(const KdqDistribution &dist) {
    double neg = 0.0;
    for (double e : dist.entries)
        if (e < 0.0) neg -= e;
    return neg;
}

} // namespace qheat
