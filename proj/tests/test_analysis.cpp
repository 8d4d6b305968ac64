#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rngbound/analysis.hpp"
#include "support.hpp"

using namespace rngbound;
using support::pmf;

namespace {

SourceModel bits(double eps, std::size_t n) {
  return SourceModel::iid(from_bias(Bias{eps}), n);
}

const Pmf& skew3() {
  static const Pmf m = pmf(3, 1, {0.5, 0.25, 0.25});
  return m;
}

void expect_pmf_near(const Pmf& got, std::vector<double> want, double tol) {
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    EXPECT_NEAR(got[i], want[i], tol) << "index " << i;
  }
}

std::vector<double> values(const Pmf& m) {
  return {m.values().begin(), m.values().end()};
}

}  // namespace

TEST(OutputPmf, Examples) {
  const auto rep = support::repetition(3);
  expect_pmf_near(output_pmf_bruteforce(rep, bits(0.5, 3)), {0.5625, 0.4375}, 1e-15);
  expect_pmf_near(output_pmf_spectral(rep, bits(0.5, 3)), {0.5625, 0.4375}, 1e-15);
  EXPECT_NEAR(output_spectrum(rep, bits(0.5, 3))[1].real(), 0.125, 1e-15);

  const auto sum3 = support::make_code(3, 1, 2, {1, 1});
  const auto src = SourceModel::iid(skew3(), 2);
  expect_pmf_near(output_pmf_bruteforce(sum3, src), {0.375, 0.3125, 0.3125}, 1e-15);
  expect_pmf_near(output_pmf_spectral(sum3, src), {0.375, 0.3125, 0.3125}, 1e-15);
  const auto s = output_spectrum(sum3, src);
  EXPECT_NEAR(std::abs(s[1] - Complex(1.0 / 16)), 0, 1e-15);
  // Same value as a direct transform of the convolution.
  const auto conv = oracle::convolve(values(skew3()), values(skew3()), 3, 1);
  EXPECT_NEAR(std::abs(s[1] - oracle::dft(conv, 3, 1)[1]), 0, 1e-15);
}

TEST(OutputPmf, IdentityCodeGivesTheTensorProduct) {
  std::mt19937_64 rng(31);
  for (unsigned p : {2u, 3u, 5u}) {
    for (std::size_t k = 1; k <= 3; ++k) {
      std::vector<Pmf> symbols;
      for (std::size_t j = 0; j < k; ++j) symbols.push_back(pmf(p, 1, oracle::random_pmf(rng, p)));
      const SourceModel src(symbols);
      const auto code = support::identity(p, k);
      const auto want = values(tensor(symbols));
      expect_pmf_near(output_pmf_bruteforce(code, src), want, 1e-15);
      expect_pmf_near(output_pmf_spectral(code, src), want, 1e-14);
      // Spectrum is the Kronecker product of the symbol spectra.
      const auto s = output_spectrum(code, src);
      for (std::size_t b = 0; b < s.size(); ++b) {
        const auto d = oracle::digits(b, p, k);
        Complex prod = 1.0;
        for (std::size_t j = 0; j < k; ++j) prod *= src.symbol_spectrum(j)[d[j]];
        ASSERT_NEAR(std::abs(s[b] - prod), 0, 1e-14);
      }
    }
  }
}

TEST(OutputPmf, MatchesEnumerationOracle) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const auto in = oracle::random_instance(rng);
    const auto code = support::make_code(in);
    const auto src = support::make_source(in);
    const auto want = oracle::output_pmf(in);
    const auto brute = output_pmf_bruteforce(code, src);
    const auto spectral = output_pmf_spectral(code, src);
    for (std::size_t y = 0; y < want.size(); ++y) {
      ASSERT_NEAR(brute[y], want[y], 1e-12);
      ASSERT_NEAR(spectral[y], want[y], 1e-10);
    }
    EXPECT_NEAR(exact_delta(code, src), oracle::l1_from_uniform(want), 1e-10);
    EXPECT_NEAR(exact_delta(code, src, Method::bruteforce),
                oracle::l1_from_uniform(want), 1e-12);
  }
}

TEST(OutputPmf, Errors) {
  const auto rep = support::repetition(3);
  EXPECT_THROW(output_pmf_spectral(rep, bits(0.5, 4)), shape_error);
  EXPECT_THROW(output_pmf_bruteforce(rep, SourceModel::iid(skew3(), 3)), shape_error);
  EXPECT_THROW(exact_delta(rep, bits(0.5, 2)), shape_error);
  EXPECT_THROW(output_pmf_bruteforce(support::repetition(25), bits(0.5, 25)),
               capacity_error);
  EXPECT_NO_THROW(output_pmf_bruteforce(support::repetition(24), bits(0.5, 24)));
  EXPECT_THROW(output_pmf_bruteforce(rep, bits(0.5, 3), 7), capacity_error);
  EXPECT_THROW(SourceModel(std::vector<Pmf>{}), shape_error);
  EXPECT_THROW(SourceModel({skew3(), from_bias(Bias{0.1})}), domain_error);
  EXPECT_THROW(SourceModel({uniform(PrimeModulus{2}, 2)}), shape_error);
}

TEST(ExactDelta, Examples) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 20; ++trial) {
    const auto in = oracle::random_instance(rng);
    const auto code = support::make_code(in);
    EXPECT_NEAR(exact_delta(code, SourceModel::iid(uniform(PrimeModulus{in.p}, 1), in.n)),
                0.0, 1e-12);
  }
  for (double eps : {0.0, 0.1, 0.25, 0.5, 0.9, 1.0}) {
    EXPECT_NEAR(exact_delta(support::repetition(3), bits(eps, 3)), eps * eps * eps, 1e-15);
    EXPECT_NEAR(exact_delta(support::identity(2, 2), bits(eps, 2)), eps + eps * eps / 2,
                1e-15);
  }
  EXPECT_NEAR(exact_delta(support::identity(2, 2), bits(0.25, 2)), 9.0 / 32, 1e-15);
  EXPECT_NEAR(exact_delta(support::hamming74(), bits(0.25, 7), Method::bruteforce),
              1789.0 / 65536, 1e-15);
  EXPECT_NEAR(exact_delta(support::make_code(3, 1, 2, {1, 1}), SourceModel::iid(skew3(), 2)),
              1.0 / 12, 1e-15);
}

TEST(Bounds, CodewordSumExamples) {
  for (double eps : {0.0, 0.1, 0.5, 0.8}) {
    EXPECT_NEAR(bound_codeword_sum(support::repetition(3), bits(eps, 3)), eps * eps * eps,
                1e-15);
    const double id = bound_codeword_sum(support::identity(2, 2), bits(eps, 2));
    EXPECT_NEAR(id, 2 * eps + eps * eps, 1e-15);
    EXPECT_GE(id, eps + eps * eps / 2);
  }
  EXPECT_EQ(bound_codeword_sum(support::hamming74(), bits(0.0, 7)), 0.0);
}

TEST(Bounds, CodewordSumIsThePilingUpProduct) {
  // For p = 2 each term is prod_{j in supp c} eps_j.
  std::mt19937_64 rng(34);
  std::uniform_real_distribution<double> u(0, 1);
  for (int trial = 0; trial < 50; ++trial) {
    auto in = oracle::random_instance(rng);
    if (in.p != 2) continue;
    std::vector<double> eps(in.n);
    for (std::size_t j = 0; j < in.n; ++j) {
      eps[j] = u(rng);
      in.symbols[j] = {(1 + eps[j]) / 2, (1 - eps[j]) / 2};
    }
    double want = 0.0;
    for (const auto& c : oracle::codewords(in)) {
      bool nonzero = false;
      double prod = 1.0;
      for (std::size_t j = 0; j < in.n; ++j) {
        if (c[j]) {
          nonzero = true;
          prod *= eps[j];
        }
      }
      if (nonzero) want += prod;
    }
    EXPECT_NEAR(bound_codeword_sum(support::make_code(in), support::make_source(in)), want,
                1e-12);
  }
}

TEST(Bounds, WeightDistributionExamples) {
  const auto h = support::hamming74();
  const double e = 0.25;
  const double closed = 7 * std::pow(e, 3) + 7 * std::pow(e, 4) + std::pow(e, 7);
  EXPECT_NEAR(bound_weight_distribution(h, e), closed, 1e-15);
  EXPECT_NEAR(bound_weight_distribution(h, e), 0.13677978515625, 1e-15);
  EXPECT_EQ(bound_weight_distribution(h, 0.0), 0.0);
  for (double x : {0.1, 0.5, 0.9}) {
    EXPECT_NEAR(bound_weight_distribution(support::repetition(3), x), x * x * x, 1e-15);
  }
  EXPECT_THROW(bound_weight_distribution(h, -0.01), domain_error);
  EXPECT_THROW(bound_weight_distribution(h, 1.01), domain_error);
  EXPECT_THROW(bound_weight_distribution(h, std::nan("")), domain_error);
}

TEST(Bounds, CweExamples) {
  const auto sum3 = support::make_code(3, 1, 2, {1, 1});
  const auto lambda = spectrum_of(skew3());
  EXPECT_NEAR(bound_cwe(sum3, lambda.values()), 0.125, 1e-15);
  EXPECT_LE(exact_delta(sum3, SourceModel::iid(skew3(), 2)), 0.125);

  // Binary codes: same as the codeword sum.
  for (double eps : {0.1, 0.3, 0.7}) {
    const auto bit = spectrum_of(from_bias(Bias{eps}));
    EXPECT_NEAR(bound_cwe(support::hamming74(), bit.values()),
                bound_codeword_sum(support::hamming74(), bits(eps, 7)), 1e-14);
  }
  const auto flat = spectrum_of(uniform(PrimeModulus{3}, 1));
  EXPECT_NEAR(bound_cwe(sum3, flat.values()), 0.0, 1e-30);

  const std::vector<Complex> bad{0.5, 0.25, 0.25};
  EXPECT_THROW(bound_cwe(sum3, bad), domain_error);
  EXPECT_THROW(bound_cwe(sum3, spectrum_of(from_bias(Bias{0.1})).values()), shape_error);
}

TEST(Bounds, MinDistanceExamples) {
  EXPECT_EQ(bound_min_distance(support::hamming74(), 0.25), 0.234375);
  EXPECT_EQ(bound_min_distance(support::hamming74(), 0.0), 0.0);
  for (double x : {0.1, 0.5, 0.9}) {
    EXPECT_NEAR(bound_min_distance(support::repetition(3), x), x * x * x, 1e-16);
  }
  EXPECT_THROW(bound_min_distance(support::hamming74(), 2.0), domain_error);
}

TEST(Bounds, SingleVariableExamples) {
  EXPECT_NEAR(bound_single_variable(skew3()), std::sqrt(2.0) / 4, 1e-15);
  EXPECT_NEAR(l1_from_uniform(skew3()), 1.0 / 3, 1e-15);
  EXPECT_LE(l1_from_uniform(skew3()), bound_single_variable(skew3()));
  EXPECT_NEAR(bound_single_variable(uniform(PrimeModulus{5}, 1)), 0.0, 1e-15);
  for (double eps : {0.0, 0.2, 0.6, 1.0}) {
    const auto m = from_bias(Bias{eps});
    EXPECT_NEAR(bound_single_variable(m), eps, 1e-15);
    EXPECT_NEAR(l1_from_uniform(m), eps, 1e-15);
  }
  EXPECT_THROW(bound_single_variable(uniform(PrimeModulus{3}, 2)), shape_error);
}

TEST(SumChain, Examples) {
  expect_pmf_near(sum_chain(skew3(), 1), values(skew3()), 1e-15);
  expect_pmf_near(sum_chain(skew3(), 2), {0.375, 0.3125, 0.3125}, 1e-15);
  EXPECT_THROW(sum_chain(skew3(), 0), domain_error);
  EXPECT_THROW(sum_chain(uniform(PrimeModulus{3}, 2), 2), shape_error);

  EXPECT_NEAR(bound_sum_chain(skew3(), 2), std::sqrt(2.0) / 16, 1e-15);
  EXPECT_NEAR(l1_from_uniform(sum_chain(skew3(), 2)), 1.0 / 12, 1e-15);
  EXPECT_EQ(bound_sum_chain(skew3(), 1), bound_single_variable(skew3()));
  EXPECT_NEAR(bound_sum_chain(uniform(PrimeModulus{7}, 1), 3), 0.0, 1e-40);
  EXPECT_THROW(bound_sum_chain(skew3(), 0), domain_error);
}

TEST(SumChain, MatchesRepeatedConvolutionAndDecays) {
  std::mt19937_64 rng(35);
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto m = oracle::random_pmf(rng, p);
      auto acc = m;
      double prev = std::numeric_limits<double>::infinity();
      for (std::size_t n = 1; n <= 25; ++n) {
        if (n > 1) acc = oracle::convolve(acc, m, p, 1);
        const auto s = sum_chain(pmf(p, 1, m), n);
        for (std::size_t y = 0; y < p; ++y) ASSERT_NEAR(s[y], acc[y], 1e-10);
        const double delta = l1_from_uniform(s);
        EXPECT_LE(delta, bound_sum_chain(pmf(p, 1, m), n) + 1e-12);
        EXPECT_LE(delta, prev + 1e-12);
        prev = delta;
      }
    }
  }
}

TEST(Analysis, SoundnessOnRandomInstances) {
  std::mt19937_64 rng(36);
  for (int trial = 0; trial < 200; ++trial) {
    const auto in = oracle::random_instance(rng);
    const auto code = support::make_code(in);
    const auto src = support::make_source(in);
    const double exact = oracle::l1_from_uniform(oracle::output_pmf(in));
    EXPECT_LE(exact, bound_codeword_sum(code, src) + kSoundnessSlack);
    if (src.is_iid()) {
      const double x = lambda_star(spectrum_of(src.symbol(0)));
      EXPECT_LE(exact, bound_cwe(code, src.symbol_spectrum(0)) + kSoundnessSlack);
      EXPECT_LE(exact, bound_weight_distribution(code, x) + kSoundnessSlack);
      EXPECT_LE(exact, bound_min_distance(code, x) + kSoundnessSlack);
    }
    const auto r = analyze(code, src);
    for (const auto& e : r.bounds) {
      if (!e.applicable) continue;
      EXPECT_TRUE(*e.valid) << e.name << " trial " << trial;
      EXPECT_LE(exact, *e.value + kSoundnessSlack) << e.name << " trial " << trial;
    }
  }
}

TEST(Analysis, DominanceChainForIidSources) {
  std::mt19937_64 rng(37);
  int checked = 0;
  while (checked < 100) {
    const auto in = oracle::random_instance(rng);
    const auto code = support::make_code(in);
    const auto symbol = pmf(in.p, 1, in.symbols.front());
    const auto src = SourceModel::iid(symbol, in.n);
    const double x = lambda_star(spectrum_of(symbol));
    const double a = bound_codeword_sum(code, src);
    const double b = bound_cwe(code, src.symbol_spectrum(0));
    const double c = bound_weight_distribution(code, x);
    const double d = bound_min_distance(code, x);
    EXPECT_LE(a, b + 1e-9);
    EXPECT_LE(b, c + 1e-9);
    EXPECT_LE(c, d + 1e-9);
    ++checked;
  }
}

TEST(Analysis, WalshCharacteristicIsTheParityBias) {
  std::mt19937_64 rng(38);
  int checked = 0;
  while (checked < 40) {
    const auto in = oracle::random_instance(rng);
    if (in.p != 2) continue;
    ++checked;
    const auto s = output_spectrum(support::make_code(in), support::make_source(in));
    const auto words = oracle::codewords(in);
    for (std::size_t b = 0; b < words.size(); ++b) {
      // P(c.X = 0) - P(c.X = 1) by enumerating every input.
      double diff = 0.0;
      for (std::size_t xi = 0; xi < oracle::ipow(2, in.n); ++xi) {
        const auto x = oracle::digits(xi, 2, in.n);
        double pr = 1.0;
        unsigned parity = 0;
        for (std::size_t j = 0; j < in.n; ++j) {
          pr *= in.symbols[j][x[j]];
          parity ^= words[b][j] & x[j];
        }
        diff += parity ? -pr : pr;
      }
      ASSERT_NEAR(std::abs(s[b]), std::abs(diff), 1e-12);
      ASSERT_EQ(s[b].imag(), 0.0);
    }
  }
}

TEST(Analysis, RowSpaceInvariance) {
  std::mt19937_64 rng(39);
  for (int trial = 0; trial < 60; ++trial) {
    const auto in = oracle::random_instance(rng);
    auto mixed = in;
    // Random invertible row operations: add multiples and scale by units.
    for (int op = 0; op < 10; ++op) {
      const std::size_t i = rng() % in.k, j = rng() % in.k;
      if (i == j) {
        const unsigned f = 1 + rng() % (in.p - 1);
        for (std::size_t c = 0; c < in.n; ++c) mixed.g[i * in.n + c] = mixed.g[i * in.n + c] * f % in.p;
      } else {
        const unsigned f = rng() % in.p;
        for (std::size_t c = 0; c < in.n; ++c) {
          mixed.g[i * in.n + c] = (mixed.g[i * in.n + c] + f * mixed.g[j * in.n + c]) % in.p;
        }
      }
    }
    const auto c1 = support::make_code(in), c2 = support::make_code(mixed);
    const auto src = support::make_source(in);
    const auto r1 = analyze(c1, src), r2 = analyze(c2, src);
    EXPECT_NEAR(*r1.exact_delta, *r2.exact_delta, 1e-12);
    ASSERT_EQ(r1.bounds.size(), r2.bounds.size());
    for (std::size_t e = 0; e < r1.bounds.size(); ++e) {
      if (r1.bounds[e].name.rfind("message_space", 0) == 0) continue;
      ASSERT_EQ(r1.bounds[e].applicable, r2.bounds[e].applicable);
      if (r1.bounds[e].applicable) {
        EXPECT_NEAR(*r1.bounds[e].value, *r2.bounds[e].value, 1e-12) << r1.bounds[e].name;
      }
    }
    // The output pmf of Y = GX permutes with the change of basis, so compare
    // multisets of probabilities.
    auto v1 = values(output_pmf_bruteforce(c1, src)), v2 = values(output_pmf_bruteforce(c2, src));
    std::sort(v1.begin(), v1.end());
    std::sort(v2.begin(), v2.end());
    for (std::size_t y = 0; y < v1.size(); ++y) ASSERT_NEAR(v1[y], v2[y], 1e-14);
  }
}

TEST(Analysis, RepetitionCodesAreTight) {
  for (std::size_t n = 1; n <= 10; ++n) {
    for (double eps : {0.1, 0.5, 0.9}) {
      const auto code = support::repetition(n);
      const auto src = bits(eps, n);
      const double exact = exact_delta(code, src);
      EXPECT_NEAR(exact, std::pow(eps, n), 1e-12);
      EXPECT_NEAR(bound_weight_distribution(code, eps), exact, 1e-12);
      EXPECT_NEAR(bound_min_distance(code, eps), exact, 1e-12);
    }
  }
}

TEST(Analysis, HammingReport) {
  const auto r = analyze(support::hamming74(), bits(0.25, 7));
  EXPECT_EQ(r.p, 2u);
  EXPECT_EQ(r.n, 7u);
  EXPECT_EQ(r.k, 4u);
  EXPECT_EQ(r.d, 3u);
  EXPECT_TRUE(r.iid);
  EXPECT_FALSE(r.identity_code);
  EXPECT_NEAR(*r.exact_delta, 1789.0 / 65536, 1e-15);
  EXPECT_NEAR(*r.bruteforce_delta, 1789.0 / 65536, 1e-15);
  EXPECT_LE(*r.crosscheck_max_diff, kCrossCheckTolerance);
  EXPECT_EQ(r.bruteforce_note, "agrees");
  EXPECT_NEAR(*r.symbol_lambda_star, 0.25, 1e-16);

  const auto* wd = r.find("weight_distribution");
  const auto* md = r.find("min_distance");
  ASSERT_TRUE(wd && md);
  EXPECT_NEAR(*wd->value, 0.13677978515625, 1e-15);
  EXPECT_EQ(*md->value, 0.234375);
  EXPECT_LE(*r.exact_delta, *wd->value);
  EXPECT_LT(*wd->value, *md->value);
  EXPECT_NEAR(*wd->tightness, *wd->value / *r.exact_delta, 1e-12);
  EXPECT_FALSE(r.find("message_space")->applicable);
  EXPECT_EQ(r.find("message_space")->note, "requires the identity generator");
  EXPECT_EQ(r.find("nonexistent"), nullptr);
}

TEST(Analysis, NonIidSourcesMarkBoundsNotApplicable) {
  const auto code = support::make_code(3, 1, 2, {1, 1});
  const SourceModel src({skew3(), pmf(3, 1, {0.6, 0.3, 0.1})});
  const auto r = analyze(code, src);
  EXPECT_FALSE(r.iid);
  EXPECT_FALSE(r.symbol_lambda_star.has_value());
  EXPECT_TRUE(r.find("codeword_sum")->applicable);
  for (const char* name : {"cwe", "weight_distribution", "min_distance"}) {
    const auto* e = r.find(name);
    ASSERT_NE(e, nullptr) << name;
    EXPECT_FALSE(e->applicable) << name;
    EXPECT_FALSE(e->value.has_value()) << name;
    EXPECT_EQ(e->note, "requires an i.i.d. source");
  }
  // (0.5,0.25,0.25) * (0.6,0.3,0.1) = (0.4, 0.325, 0.275)
  EXPECT_NEAR(*r.exact_delta, 2.0 / 15, 1e-15);
}

TEST(Analysis, IdentityCodeExposesMessageSpaceBounds) {
  std::mt19937_64 rng(40);
  for (unsigned p : {2u, 3u, 5u}) {
    for (std::size_t k = 1; k <= 3; ++k) {
      const auto symbol = pmf(p, 1, oracle::random_pmf(rng, p));
      const auto src = SourceModel::iid(symbol, k);
      const auto r = analyze(support::identity(p, k), src);
      EXPECT_TRUE(r.identity_code);
      const auto* cs = r.find("codeword_sum");
      const auto* ms = r.find("message_space");
      const auto* mi = r.find("message_space_iid");
      ASSERT_TRUE(ms->applicable && mi->applicable);
      EXPECT_NEAR(*ms->value, *cs->value, 1e-12);
      EXPECT_NEAR(*mi->value,
                  bound_weight_distribution(support::identity(p, k), *r.symbol_lambda_star),
                  1e-12);
      EXPECT_LE(*cs->value, *mi->value + 1e-12);
      if (p == 2) {
        EXPECT_NEAR(*mi->value, *cs->value, 1e-12);
      }
      EXPECT_TRUE(*mi->valid);
    }
  }
  const SourceModel mixed({from_bias(Bias{0.2}), from_bias(Bias{0.4})});
  const auto r = analyze(support::identity(2, 2), mixed);
  EXPECT_TRUE(r.find("message_space")->applicable);
  EXPECT_FALSE(r.find("message_space_iid")->applicable);
  EXPECT_NEAR(*r.find("message_space")->value, 0.2 + 0.4 + 0.08, 1e-15);
}

TEST(Analysis, UnbiasedSourceGivesZerosAndInfiniteTightness) {
  const auto r = analyze(support::identity(2, 2), bits(0.0, 2));
  EXPECT_EQ(*r.exact_delta, 0.0);
  for (const auto& e : r.bounds) {
    ASSERT_TRUE(e.applicable) << e.name;
    EXPECT_EQ(*e.value, 0.0) << e.name;
    EXPECT_TRUE(*e.valid);
  }
  EXPECT_EQ(tightness_ratio(0.0, 0.0), 0.0);
  EXPECT_EQ(tightness_ratio(0.5, 0.0), std::numeric_limits<double>::infinity());
  EXPECT_EQ(tightness_ratio(0.5, 0.25), 2.0);
}

TEST(Analysis, BruteForceRefusalAndOptions) {
  const auto code = support::repetition(30);
  const auto r = analyze(code, bits(0.5, 30));
  EXPECT_FALSE(r.bruteforce_delta.has_value());
  EXPECT_NE(r.bruteforce_note.find("refused"), std::string::npos);
  EXPECT_NEAR(*r.exact_delta, std::pow(0.5, 30), 1e-20);

  AnalysisOptions off;
  off.bruteforce = false;
  EXPECT_EQ(analyze(support::hamming74(), bits(0.25, 7), off).bruteforce_note, "disabled");
  AnalysisOptions small;
  small.max_bruteforce = 64;
  EXPECT_NE(analyze(support::hamming74(), bits(0.25, 7), small).bruteforce_note.find("refused"),
            std::string::npos);
  EXPECT_THROW(analyze(code, bits(0.5, 29)), shape_error);
}

TEST(Analysis, Deterministic) {
  std::mt19937_64 rng(41);
  const auto in = oracle::random_instance(rng, 8);
  const auto code = support::make_code(in);
  const auto src = support::make_source(in);
  const auto a = analyze(code, src), b = analyze(code, src);
  EXPECT_EQ(*a.exact_delta, *b.exact_delta);
  for (std::size_t e = 0; e < a.bounds.size(); ++e) {
    EXPECT_EQ(a.bounds[e].value, b.bounds[e].value);
  }
}
