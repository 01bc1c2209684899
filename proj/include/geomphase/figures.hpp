#pragma once

// Bundled sweep presets for the reference figure set (ids fig1a..fig6b).
// Each preset resolves to an ordinary SweepConfig, so `figure <id>` output is
// byte-identical to a manual `sweep` run with the same configuration. Axis
// choices that the preset definitions leave open (grid densities, the r-axis
// starting at 0.01, the J-axis spans) are recorded in the output metadata
// header.

#include "geomphase/sweep.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace gp {

struct FigurePreset {
    std::string id;
    std::string summary;
    SweepConfig config;
};

inline const std::vector<FigurePreset>& figure_presets()
{
    static const std::vector<FigurePreset> presets = [] {
        std::vector<FigurePreset> out;
        const auto theta_axis = [](double hi) {
            return AxisSpec::make_uniform(SweepParam::Theta, 0.0, hi, 101);
        };
        const auto r_axis = AxisSpec::make_uniform(SweepParam::R, 0.01, 1.0, 100);

        {  // gamma_1 surface over (theta, r); homogeneous field, omega1*t = pi/2
            SweepConfig c;
            c.family = StateFamily::Phi;
            c.n = 1.0;
            c.J = 0.0;
            c.omega1t = kPi / 2.0;
            c.axes = {theta_axis(kPi), r_axis};
            out.push_back({"fig1a", "gamma_1 vs (theta, r), n=1, omega1t=pi/2", c});
        }
        {  // gamma_2 surface over (theta, r); omega1 = 2*omega2, omega1*t = pi
            SweepConfig c;
            c.family = StateFamily::Psi;
            c.n = 0.5;
            c.J = 0.0;
            c.omega1t = kPi;
            c.axes = {theta_axis(kPi), r_axis};
            out.push_back({"fig1b", "gamma_2 vs (theta, r), n=0.5, omega1t=pi", c});
        }
        {  // gamma_1 line scans vs theta at several field inhomogeneities, r=1
            SweepConfig c;
            c.family = StateFamily::Phi;
            c.r = 1.0;
            c.J = 0.0;
            c.omega1t = kPi / 2.0;
            c.axes = {AxisSpec::make_list(SweepParam::N, {0.99, 0.9, 0.5, 0.0}),
                      theta_axis(kPi / 2.0)};
            out.push_back({"fig2a", "gamma_1 vs theta at n in {0.99,0.9,0.5,0}, r=1, omega1t=pi/2", c});
        }
        {
            SweepConfig c;
            c.family = StateFamily::Psi;
            c.r = 1.0;
            c.J = 0.0;
            c.omega1t = kPi;
            c.axes = {AxisSpec::make_list(SweepParam::N, {0.5, 0.1, 0.01}), theta_axis(kPi / 2.0)};
            out.push_back({"fig2b", "gamma_2 vs theta at n in {0.5,0.1,0.01}, r=1, omega1t=pi", c});
        }
        {  // same scans at evolution times with no singular point
            SweepConfig c;
            c.family = StateFamily::Phi;
            c.r = 1.0;
            c.J = 0.0;
            c.omega1t = kPi / 4.0;
            c.axes = {AxisSpec::make_list(SweepParam::N, {0.99, 0.9, 0.5, 0.0}),
                      theta_axis(kPi / 2.0)};
            out.push_back({"fig2c", "gamma_1 vs theta at n in {0.99,0.9,0.5,0}, r=1, omega1t=pi/4", c});
        }
        {
            SweepConfig c;
            c.family = StateFamily::Psi;
            c.r = 1.0;
            c.J = 0.0;
            c.omega1t = kPi / 2.0;
            c.axes = {AxisSpec::make_list(SweepParam::N, {0.5, 0.1, 0.01}), theta_axis(kPi / 2.0)};
            out.push_back({"fig2d", "gamma_2 vs theta at n in {0.5,0.1,0.01}, r=1, omega1t=pi/2", c});
        }
        {  // gamma_2 surface over (r, J); Werner state, omega1*t = 2*omega2*t = pi
            SweepConfig c;
            c.family = StateFamily::Psi;
            c.theta = kPi / 4.0;
            c.n = 0.5;
            c.omega1t = kPi;
            c.axes = {r_axis, AxisSpec::make_uniform(SweepParam::J, 0.0, 3.0, 121)};
            out.push_back({"fig3a", "gamma_2 vs (r, J), theta=pi/4, n=0.5, omega1t=pi", c});
        }
        {
            SweepConfig c;
            c.family = StateFamily::Psi;
            c.theta = 3.0 * kPi / 4.0;
            c.n = 0.5;
            c.omega1t = kPi;
            c.axes = {r_axis, AxisSpec::make_uniform(SweepParam::J, 0.0, 3.0, 121)};
            out.push_back({"fig3b", "gamma_2 vs (r, J), theta=3pi/4, n=0.5, omega1t=pi", c});
        }
        {  // gamma_2 vs J at several n; the n->0 curve is realized as n=0.001
            SweepConfig c;
            c.family = StateFamily::Psi;
            c.theta = kPi / 4.0;
            c.r = 1.0;
            c.omega1t = kPi;
            c.axes = {AxisSpec::make_list(SweepParam::N, {0.001, 0.1, 0.5, 0.8}),
                      AxisSpec::make_uniform(SweepParam::J, 0.0, 3.0, 601)};
            out.push_back({"fig4", "gamma_2 vs J at n in {0.001,0.1,0.5,0.8}, theta=pi/4, r=1, omega1t=pi", c});
        }
        {  // one particle in zero field: as fig3 but omega2 = 0
            SweepConfig c;
            c.family = StateFamily::Psi;
            c.theta = kPi / 4.0;
            c.n = 0.0;
            c.omega1t = kPi;
            c.axes = {r_axis, AxisSpec::make_uniform(SweepParam::J, 0.0, 3.0, 121)};
            out.push_back({"fig5a", "gamma_2 vs (r, J), theta=pi/4, n=0, omega1t=pi", c});
        }
        {
            SweepConfig c;
            c.family = StateFamily::Psi;
            c.theta = 3.0 * kPi / 4.0;
            c.n = 0.0;
            c.omega1t = kPi;
            c.axes = {r_axis, AxisSpec::make_uniform(SweepParam::J, 0.0, 3.0, 121)};
            out.push_back({"fig5b", "gamma_2 vs (r, J), theta=3pi/4, n=0, omega1t=pi", c});
        }
        {  // large-J limit: fig3 settings with r = 1
            SweepConfig c;
            c.family = StateFamily::Psi;
            c.theta = kPi / 4.0;
            c.r = 1.0;
            c.n = 0.5;
            c.omega1t = kPi;
            c.axes = {AxisSpec::make_uniform(SweepParam::J, 0.0, 100.0, 1001)};
            out.push_back({"fig6a", "gamma_2 vs J in [0,100], theta=pi/4, r=1, n=0.5, omega1t=pi", c});
        }
        {
            SweepConfig c;
            c.family = StateFamily::Psi;
            c.theta = 3.0 * kPi / 4.0;
            c.r = 1.0;
            c.n = 0.5;
            c.omega1t = kPi;
            c.axes = {AxisSpec::make_uniform(SweepParam::J, 0.0, 100.0, 1001)};
            out.push_back({"fig6b", "gamma_2 vs J in [0,100], theta=3pi/4, r=1, n=0.5, omega1t=pi", c});
        }
        return out;
    }();
    return presets;
}

inline const FigurePreset* find_figure(std::string_view id)
{
    for (const FigurePreset& p : figure_presets())
        if (p.id == id)
            return &p;
    return nullptr;
}

inline std::string figure_id_list()
{
    std::string ids;
    for (const FigurePreset& p : figure_presets()) {
        if (!ids.empty())
            ids += ", ";
        ids += p.id;
    }
    return ids;
}

}  // namespace gp
