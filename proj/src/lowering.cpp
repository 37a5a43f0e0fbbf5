// Copyright 2026 The qromc Authors
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

#include "qromc/lowering.hpp"

#include <cmath>
#include <numbers>

#include "qromc/error.hpp"

namespace qromc {
namespace {

using std::numbers::pi;

class Lowerer {
  public:
    explicit Lowerer(const Layout &layout) : out_(layout) {}

    void rx(Qubit q, double a) { out_.append(gates::rx(q, normalize_angle(a))); }
    void ry(Qubit q, double a) { out_.append(gates::ry(q, normalize_angle(a))); }
    void rz(Qubit q, double a) { out_.append(gates::rz(q, normalize_angle(a))); }
    void cx(Qubit c, Qubit t) { out_.append(gates::cx(c, t)); }

    // Rz(pi) then Ry(pi/2) equals H up to a global phase of i.
    void h(Qubit q) {
        rz(q, pi);
        ry(q, pi / 2);
    }

    void cz(Qubit c, Qubit t) {
        ry(t, pi / 2);
        cx(c, t);
        ry(t, -pi / 2);
    }

    void crz(Qubit c, Qubit t, double a) {
        rz(t, a / 2);
        cx(c, t);
        rz(t, -a / 2);
        cx(c, t);
    }

    void crx(Qubit c, Qubit t, double a) {
        ry(t, -pi / 2);
        crz(c, t, a);
        ry(t, pi / 2);
    }

    void ccx(Qubit a, Qubit b, Qubit t) {
        const double quarter = pi / 4;
        h(t);
        cx(b, t);
        rz(t, -quarter);
        cx(a, t);
        rz(t, quarter);
        cx(b, t);
        rz(t, -quarter);
        cx(a, t);
        rz(b, quarter);
        rz(t, quarter);
        h(t);
        cx(a, b);
        rz(a, quarter);
        rz(b, -quarter);
        cx(a, b);
    }

    void gate(const Gate &g) {
        for (const Control &c : g.controls) {
            if (!c.positive) {
                rx(c.qubit, pi);
            }
        }
        positive(g);
        for (const Control &c : g.controls) {
            if (!c.positive) {
                rx(c.qubit, pi);
            }
        }
    }

    Circuit take() { return std::move(out_); }

  private:
    void positive(const Gate &g) {
        const std::size_t k = g.controls.size();
        auto ctl = [&](std::size_t i) { return g.controls[i].qubit; };
        switch (g.kind) {
        case GateKind::x:
        case GateKind::cx:
        case GateKind::ccx:
        case GateKind::mcx:
            if (k > 2) {
                throw InvalidArgument("lower_uniform: X gate with more than two controls; run lower_mcx first");
            }
            for (Qubit t : g.targets) {
                if (k == 0) {
                    rx(t, pi);
                } else if (k == 1) {
                    cx(ctl(0), t);
                } else {
                    ccx(ctl(0), ctl(1), t);
                }
            }
            return;
        case GateKind::h:
            h(g.targets[0]);
            return;
        case GateKind::cz:
            cz(ctl(0), g.targets[0]);
            return;
        case GateKind::rx:
            rx(g.targets[0], g.angle);
            return;
        case GateKind::ry:
            ry(g.targets[0], g.angle);
            return;
        case GateKind::rz:
            rz(g.targets[0], g.angle);
            return;
        case GateKind::mcrx:
        case GateKind::mcrz:
            if (k > 1) {
                throw InvalidArgument("lower_uniform: rotation with more than one control; run lower_mcx first");
            }
            if (g.kind == GateKind::mcrx) {
                crx(ctl(0), g.targets[0], g.angle);
            } else {
                crz(ctl(0), g.targets[0], g.angle);
            }
            return;
        }
    }

    Circuit out_;
};

}  // namespace

double normalize_angle(double angle) {
    double r = std::remainder(angle, 2 * pi);
    if (r <= -pi) {
        r += 2 * pi;
    }
    return r;
}

bool is_uniform(const Circuit &circuit) {
    for (const Gate &g : circuit.gates()) {
        const bool rotation = (g.kind == GateKind::rx || g.kind == GateKind::ry || g.kind == GateKind::rz) &&
                              g.controls.empty();
        const bool cnot = g.kind == GateKind::cx && g.controls.size() == 1 && g.controls[0].positive;
        if (!rotation && !cnot) {
            return false;
        }
    }
    return true;
}

Circuit lower_uniform(const Circuit &circuit) {
    Lowerer lowerer(circuit.layout());
    for (const Gate &g : circuit.gates()) {
        lowerer.gate(g);
    }
    return lowerer.take();
}

}  // namespace qromc
