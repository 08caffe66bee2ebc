#include "dapx/io.hpp"

#include <json.hpp>

namespace dapx {

std::string format_refinable(const std::function<RatInterval(long)>& at_bits, int sig) {
  long bits = 80;
  for (;;) {
    RatInterval iv = at_bits(bits);
    if (iv.is_point()) return rat_to_decimal(iv.lo, sig);
    if (iv.contains_zero() && iv.width() < Rat(Int(1), pow_int(2, 200)))
      return "0";  // numerically indistinguishable from an exact zero at 60 digits
    try {
      return enclosure_to_decimal(iv, sig);
    } catch (const std::runtime_error&) {
      bits *= 2;
      if (bits > 16384) throw;
    }
  }
}

std::string format_magnitude_root(const Magnitude& m, int sig) {
  if (m.value.sign() == 0) return "0";
  return format_refinable(
      [&](long bits) {
        RatInterval e = m.value.enclosure(bits);
        if (e.lo < 0) e.lo = 0;
        FloatInterval f = FloatInterval::from_rat_interval(e, bits + 32).root_pos(m.power);
        Rat mid = f.mid_rat(), w = f.width_rat();
        return RatInterval{mid - w, mid + w};
      },
      sig);
}

void write_approx_csv(std::ostream& os, const TargetVector& theta, const NormSpec& spec,
                      const ApproxSequence& seq) {
  int d = spec.dim;
  os << "k,q";
  for (int i = 1; i <= d; ++i) os << ",p_" << i;
  for (int i = 1; i <= d; ++i) os << ",disp_" << i;
  os << ",norm_disp,primitive,tie\n";
  for (size_t k = 0; k < seq.entries.size(); ++k) {
    const ApproxVector& v = seq.entries[k];
    os << k << "," << v.q.get_str();
    for (int i = 0; i < d; ++i) os << "," << v.p[i].get_str();
    for (int i = 0; i < d; ++i) {
      std::string s = format_refinable([&](long bits) {
        Displacement disp = displacement(theta, v, spec, bits);
        return disp.coords[i];
      });
      os << "," << s;
    }
    Displacement disp = displacement(theta, v, spec, 96);
    os << "," << format_magnitude_root(disp.norm_power) << "," << (v.primitive ? 1 : 0) << ","
       << (v.tie ? 1 : 0) << "\n";
  }
}

void write_event_csv(std::ostream& os, const std::vector<VisitEvent>& events) {
  if (events.empty()) {
    os << "t,q,disp_norm,in_sharp,in_B\n";
    return;
  }
  int d = events.front().dim;
  os << "t,q";
  for (int i = 1; i <= d; ++i) os << ",p_" << i;
  os << ",disp_norm,in_sharp,in_B\n";
  for (const auto& e : events) {
    os << format_refinable([&](long bits) { return e.t_enclosure(bits); }) << ","
       << e.q.get_str();
    for (int i = 0; i < d; ++i) os << "," << e.p[i].get_str();
    os << "," << format_magnitude_root(e.disp_norm) << "," << (e.in_sharp ? 1 : 0) << ","
       << (e.in_B ? 1 : 0) << "\n";
  }
}

std::string observable_json(const TargetVector& theta, const NormSpec& spec,
                            const ApproxVector& v, const std::vector<long>& moduli) {
  nlohmann::json j;
  j["q"] = v.q.get_str();
  j["p"] = nlohmann::json::array();
  for (const auto& x : v.p) j["p"].push_back(x.get_str());
  j["disp"] = nlohmann::json::array();
  for (int i = 0; i < spec.dim; ++i)
    j["disp"].push_back(format_refinable([&](long bits) {
      return displacement(theta, v, spec, bits).coords[i];
    }));
  std::vector<Int> full = v.p;
  full.push_back(v.q);
  LiftClass lift = lift_functional(full);
  nlohmann::json gram = nlohmann::json::array();
  for (const auto& row : lift.lattice.gram) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& x : row) r.push_back(rat_to_string(x));
    gram.push_back(r);
  }
  nlohmann::json f = nlohmann::json::array();
  for (const auto& x : lift.functional) f.push_back(rat_to_string(x));
  j["lift"] = {{"gram", gram}, {"f", f}, {"scale_q", lift.lattice.q.get_str()}};
  if (spec.dim == 1) j["lift"]["torus"] = rat_to_string(lift.torus_d1);
  if (!moduli.empty()) {
    ResidueProfile rp = residues(full, moduli);
    nlohmann::json res = nlohmann::json::object();
    for (size_t i = 0; i < rp.moduli.size(); ++i) {
      nlohmann::json one;
      one["cls"] = rp.residues[i];
      one["prim"] = (bool)rp.primitive_mod_m[i];
      res[std::to_string(rp.moduli[i])] = one;
    }
    j["residues"] = res;
  }
  return j.dump();
}

std::string verdict_json(const std::string& law, size_t n, double statistic, double gate,
                         bool pass) {
  nlohmann::json j;
  j["law"] = law;
  j["N"] = n;
  j["statistic"] = statistic;
  j["gate"] = gate;
  j["pass"] = pass;
  return j.dump();
}

}  // namespace dapx
