#pragma once

#include <optional>
#include <string>
#include <vector>

#include "milreg/regulator/forms.hpp"

namespace milreg::regulator {

// log|f_i| and df_i/f_i at one point.
struct FunctionSample {
  double log_abs = 0.0;
  Form dlog;
};

// pi_p(dlog f_{i1} ^ ... ^ dlog f_{ik}).
struct ProjectedWedge {
  int p = 0;
  std::vector<int> indices;
};

// coef * log|f_log| * (factor_1 ^ ... ^ factor_r).
struct STerm {
  int coef = 1;
  int log_index = 0;
  std::vector<ProjectedWedge> factors;
};

// Pair (f, s) of the cone description, kept structurally: f is a wedge of
// dlog f_i (absent for s-only cochains), s a sum of STerm.
struct DeligneCochain {
  int weight = 0;
  std::optional<std::vector<int>> f_part;
  std::vector<STerm> s_part;

  int f_degree() const { return f_part ? static_cast<int>(f_part->size()) : 0; }
  std::string str() const;
};

// (dlog f_i, log|f_i|) in weight 1.
DeligneCochain singleton(int index);
DeligneCochain s_only(int weight, std::vector<STerm> s);

// f = f_p ^ f_q, s = (-1)^{deg f_p} pi_p(f_p) ^ s_q + s_p ^ pi_q(f_q).
DeligneCochain cup(const DeligneCochain& x, const DeligneCochain& y);
DeligneCochain iterated_cup(int m);

Form evaluate_f(const DeligneCochain& c, const std::vector<FunctionSample>& samples);
Form evaluate_s(const DeligneCochain& c, const std::vector<FunctionSample>& samples);

// The closed formulas for xi(f_1, .., f_m), 1 <= m <= 4. For m = 4 the last
// term is read as -log|f_4| pi_3(dlog f_1 ^ dlog f_2 ^ dlog f_3).
// Throws DomainError(UnsupportedArity) otherwise.
Form xi_closed(const std::vector<FunctionSample>& samples);

}  // namespace milreg::regulator
