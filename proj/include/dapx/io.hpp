#pragma once

#include <functional>
#include <ostream>

#include "dapx/realfield.hpp"

namespace dapx {

// 18 significant digits from a refinable enclosure: widens the request until
// the enclosure pins the digits (exact zeros print as "0").
std::string format_refinable(const std::function<RatInterval(long)>& at_bits, int sig = 18);

// ||x||^pow magnitude -> decimal of ||x||
std::string format_magnitude_root(const Magnitude& m, int sig = 18);

// CSV per approximation entry: k,q,p_1..p_d,disp_1..disp_d,norm_disp,primitive,tie
void write_approx_csv(std::ostream& os, const TargetVector& theta, const NormSpec& spec,
                      const ApproxSequence& seq);

// CSV per visit event: t,q,p_1..p_d,disp_norm,in_sharp,in_B
void write_event_csv(std::ostream& os, const std::vector<VisitEvent>& events);

// JSON record per observable set:
// {q, p:[...], disp:[...], lift:{gram:[[..]], f:[..]}, residues:{"m":[..], prim:bool}}
std::string observable_json(const TargetVector& theta, const NormSpec& spec,
                            const ApproxVector& v, const std::vector<long>& moduli);

// JSON verdict record: {law, N, statistic, gate, pass}
std::string verdict_json(const std::string& law, size_t n, double statistic, double gate,
                         bool pass);

}  // namespace dapx
