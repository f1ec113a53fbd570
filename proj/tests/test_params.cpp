#include <cmath>

#include "doctest.h"
#include "vacua/params.hpp"

using namespace vacua;

TEST_CASE("dimensionless groups") {
  DipoleSpecies sp;
  sp.gamma_ratio = 1e-6;
  MediumSpec med;
  med.rho_bar = 1e-3;
  med.zeta0 = 0.1;
  const auto g = derive_groups(sp, med);
  CHECK(g.x == doctest::Approx(3.0 * M_PI * 1e-9 / 1e-3).epsilon(1e-14));
  CHECK(g.x == doctest::Approx(9.4248e-6).epsilon(1e-4));
  CHECK(g.recur_ratio == doctest::Approx(1e-6).epsilon(1e-12));
}

TEST_CASE("x identity holds across the parameter range") {
  DipoleSpecies sp;
  MediumSpec med;
  for (double g : {1e-8, 1e-6, 1e-3}) {
    for (double z : {0.02, 0.3, 2.0}) {
      for (double rb : {1e-4, 0.05}) {
        sp.gamma_ratio = g;
        med.zeta0 = z;
        med.rho_bar = rb;
        const auto gr = derive_groups(sp, med);
        CHECK(gr.x == doctest::Approx(3.0 * M_PI * g * rb / (z * z * z)).epsilon(1e-14));
      }
    }
  }
}

TEST_CASE("invariant rejections") {
  DipoleSpecies sp;
  sp.gamma_ratio = 0.5;
  MediumSpec med;
  CHECK_THROWS_AS(derive_groups(sp, med), Error);
  try {
    derive_groups(sp, med);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidParameter);
    CHECK(e.is_parameter_error());
  }
  sp.gamma_ratio = 1e-6;
  sp.cutoff = 0.5;
  CHECK_THROWS_AS(sp.validate(), Error);
  sp.cutoff = 10.0;
  med.rho_bar = -1.0;
  CHECK_THROWS_AS(med.validate(), Error);
  med.rho_bar = 1e-3;
  med.correlation = CorrelationModel::HardSphereOverdensity;
  med.overdensity_c = 0.0;
  CHECK_THROWS_AS(med.validate(), Error);
}

TEST_CASE("mu2 is derived from the linewidth") {
  DipoleSpecies sp;
  sp.gamma_ratio = 2.5e-7;
  CHECK(sp.mu2() == doctest::Approx(3.0 * M_PI * 2.5e-7).epsilon(1e-15));
}

TEST_CASE("derive_groups is deterministic") {
  DipoleSpecies sp;
  MediumSpec med;
  const auto a = derive_groups(sp, med);
  const auto b = derive_groups(sp, med);
  CHECK(a.x == b.x);
  CHECK(a.recur_ratio == b.recur_ratio);
}
