#include "susyfactory/presets.hpp"

#include <cmath>

namespace susy {
namespace presets {

Table1 table1() {
  Table1 t;
  t.config.w = "i*k*x^3 - i*g*x^2";
  t.config.params = {{"k", 1.0}, {"g", 1.0}};
  t.config.convention = "type1";
  t.config.method = "ho";
  t.config.n_keep = 300;
  t.config.omega = 2.5;
  t.config.tol = 5e-6;
  t.config.depth = 5;
  t.config.expect = "susy";
  t.runs = {
      {{{"k", 1.0}, {"g", 1.0}},
       {1.935482, 6.298495, 11.680970, 18.042635, 25.254604},
       {0.0, 1.935482, 6.298495, 11.680970, 18.042634}},
      {{{"k", 2.0}, {"g", 2.0}},
       {2.737184, 8.907417, 16.519386, 25.516139, 35.715404},
       {0.0, 2.737184, 8.907417, 16.519389, 25.516137}},
  };
  return t;
}

Table2 table2() {
  Table2 t;
  t.config.w = "x^2";
  t.config.convention = "type1";
  t.config.method = "fd";
  t.config.x_min = -14.0;
  t.config.x_max = 14.0;
  t.config.points = 1600;
  t.config.theta = M_PI / 6.0;
  t.config.max_imag = 5e-3;
  t.config.tol = 1e-3;
  t.config.depth = 5;
  t.config.expect = "iso";
  t.e_ref = {0.0, 3.398150, 8.700453, 14.977808, 21.999001};
  t.theta_step = M_PI / 36.0;
  return t;
}

Table34 table3() {
  Table34 t;
  t.config_a.w1 = "x";
  t.config_a.w2 = "x^3";
  t.config_b.w1 = "x^3";
  t.config_b.w2 = "x";
  for (RunConfig* c : {&t.config_a, &t.config_b}) {
    c->convention = "type2";
    c->method = "ho";
    c->n_keep = 200;
    c->omega = 2.0;
    c->tol = 1e-5;
    c->depth = 4;
    c->expect = "twins";
  }
  t.e_plus_a = {2.0679992, 5.6318273, 9.9952299, 15.0475601};
  t.e_minus_a = {0.0, 2.0679992, 5.6318273, 9.9952299};
  t.e_plus_b = t.e_plus_a;
  t.e_minus_b = t.e_minus_a;
  t.value_tol = 1e-5;
  t.class_tol = 1e-5;
  t.quadruplet = false;
  return t;
}

Table34 table4() {
  Table34 t;
  t.config_a.w1 = "x^2";
  t.config_a.w2 = "x^4";
  t.config_b.w1 = "x^4";
  t.config_b.w2 = "x^2";
  for (RunConfig* c : {&t.config_a, &t.config_b}) {
    c->convention = "type2";
    c->method = "ho";
    c->n_keep = 240;
    c->omega = 2.5;
    c->tol = 1e-3;
    c->depth = 4;
    c->expect = "quadruplet";
  }
  t.e_plus_a = {0.5370379, 4.0060227, 9.0199248, 15.2151670};
  t.e_minus_a = t.e_plus_a;
  // the source's H4+ column quotes 4.0070227 (suspected typo); kept verbatim
  t.e_plus_b = {0.5370379, 4.0070227, 9.0199248, 15.2151670};
  t.e_minus_b = t.e_plus_a;
  t.value_tol = 1e-3;
  t.class_tol = 1e-3;
  t.quadruplet = true;
  return t;
}

Table5 table5() {
  Table5 t;
  t.config.w = "i*x*abs(x)";
  t.config.convention = "type1";
  t.config.method = "ho";
  t.config.n_keep = 300;
  t.config.omega = 1.6;
  t.config.tol = 1e-6;
  t.config.depth = 4;
  t.config.expect = "susy";
  t.fd_oracle = t.config;
  t.fd_oracle.method = "fd";
  t.fd_oracle.x_min = -10.0;
  t.fd_oracle.x_max = 10.0;
  t.fd_oracle.points = 12000;
  t.fd_oracle.tol = 1e-4;
  t.e_plus = {1.9699, 5.5071, 9.3945, 13.8583};
  t.e_minus = {0.0, 1.9695, 5.5068, 9.3942};
  return t;
}

}  // namespace presets
}  // namespace susy
