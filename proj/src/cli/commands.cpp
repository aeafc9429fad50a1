#include "smithlat/cli/commands.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "smithlat/exactla/smith.hpp"
#include "smithlat/fpg/cohomology.hpp"
#include "smithlat/fpg/json.hpp"
#include "smithlat/hilb2/hilb2.hpp"
#include "smithlat/lattice/named.hpp"
#include "smithlat/order11/order11.hpp"

namespace smithlat::cli {

namespace {

using fixedlocus::Count;
using fixedlocus::Prime;

Integer power(unsigned long base, unsigned long exp) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

Report timed(const std::function<Report()>& build) {
  const auto start = std::chrono::steady_clock::now();
  Report r = build();
  r.set_wall_time(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  return r;
}

Json vector_json(const IntVector& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(x.get_str());
  return j;
}

Json form_values_json(const std::vector<std::pair<Rational, std::size_t>>& values) {
  Json j = Json::array();
  for (const auto& [q, n] : values) j.push_back({{"q", q.get_str()}, {"count", n}});
  return j;
}

Json pairs_json(const std::vector<fixedlocus::AdmissiblePair>& pairs) {
  Json j = Json::array();
  for (const auto& x : pairs) j.push_back({{"a", dec(x.a)}, {"m", dec(x.m)}, {"h_star", dec(x.h_star)}});
  return j;
}

std::vector<Prime> primes_up_to(Prime n) {
  std::vector<Prime> out;
  for (Prime p = 2; p <= n; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return Json::parse(in);
}

}  // namespace

fpg::JordanType parse_jordan_type(fpg::Prime p, const std::string& text) {
  fpg::JordanType t(p);
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("Jordan type entries look like q:n, got '" + item + "'");
    t.add(std::stoi(item.substr(0, colon)), std::stoll(item.substr(colon + 1)));
  }
  return t;
}

IntVector parse_int_vector(const std::string& text) {
  IntVector v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.emplace_back(item);
  return v;
}

Report snf_report(const IntMatrix& a) {
  return timed([&] {
    Report r("snf");
    r.inputs()["matrix"] = to_json(a);
    const SmithForm s = snf(a);
    r.values()["invariant_factors"] = dec_list(s.invariant_factors);
    r.values()["rank"] = dec(static_cast<long long>(s.rank()));
    r.values()["cokernel"] = lattice::FiniteAbelianGroup(s.nontrivial_factors()).to_string();
    r.values()["left"] = to_json(s.left);
    r.values()["right"] = to_json(s.right);
    r.check("left * A * right is diagonal", "Smith form certificate",
            s.left * a * s.right == s.diagonal_form(a.rows(), a.cols()), true, true);
    const Integer dl = det(s.left), dr = det(s.right);
    r.check("transforms unimodular", "Smith form certificate", abs(dl) == 1 && abs(dr) == 1,
            Json::array({"+-1", "+-1"}), Json::array({dec(dl), dec(dr)}));
    bool chain = true;
    for (std::size_t i = 1; i < s.invariant_factors.size(); ++i)
      chain = chain && mpz_divisible_p(s.invariant_factors[i].get_mpz_t(), s.invariant_factors[i - 1].get_mpz_t());
    r.check("divisibility chain", "Smith form certificate", chain, true, chain);
    return r;
  });
}

Report lattice_report(const std::string& label, const lattice::GramLattice& input, const LatticeOptions& options) {
  return timed([&] {
    Report r("lattice");
    r.inputs()["lattice"] = label;
    const lattice::GramLattice l = options.rescale ? lattice::rescale(input, *options.rescale) : input;
    if (options.rescale) r.inputs()["rescale"] = dec(*options.rescale);
    r.values()["rank"] = dec(static_cast<long long>(l.rank()));
    r.values()["det"] = dec(l.determinant());
    r.values()["even"] = l.is_even();
    r.values()["positive_definite"] = l.is_positive_definite();
    const auto group = lattice::disc_group(l);
    r.values()["disc_group"] = group.to_string();
    r.values()["disc_invariant_factors"] = dec_list(group.invariant_factors());
    r.check("|A_L| = |det|", "discriminant group order", group.order() == abs(l.determinant()),
            dec(abs(l.determinant())), dec(group.order()));
    if (l.is_even() && group.order() <= 100000) r.values()["disc_form_values"] = form_values_json(lattice::disc_form_value_counts(l));
    if (options.p) {
      const auto pe = lattice::is_p_elementary(l, *options.p);
      r.inputs()["p"] = dec(static_cast<long long>(*options.p));
      r.values()["p_elementary"] = pe.elementary;
      if (pe.elementary) r.values()["p_elementary_exponent"] = dec(static_cast<long long>(pe.exponent));
    }
    if (options.short_norm) {
      r.inputs()["norm"] = dec(*options.short_norm);
      const auto vs = lattice::short_vectors(l, *options.short_norm);
      Json list = Json::array();
      for (const auto& v : vs) list.push_back(vector_json(v));
      r.values()["short_vectors"] = list;
      r.values()["representative_count"] = dec(static_cast<long long>(vs.size()));
      r.values()["vector_count"] = dec(static_cast<long long>(2 * vs.size()));
    }
    if (options.orth) {
      r.inputs()["orth"] = vector_json(*options.orth);
      const auto c = lattice::orth_complement(l, *options.orth);
      r.values()["complement_gram"] = to_json(c.gram());
      r.values()["complement_disc"] = dec(abs(c.determinant()));
    }
    return r;
  });
}

Report named_lattices_report() {
  return timed([] {
    Report r("lattice named");
    const auto k3 = lattice::k3_lattice();
    const auto bb = lattice::bb_lattice();
    const auto ns = lattice::ns_order11();
    r.expect("U discriminant group", "hyperbolic plane is unimodular", "0",
             lattice::disc_group(lattice::hyperbolic_plane()).to_string());
    const auto e8 = lattice::e8_minus();
    r.check("E8(-1) even unimodular negative definite", "E8(-1)", e8.is_even() && e8.determinant() == 1 &&
                !e8.is_positive_definite() && rescale(e8, -1).is_positive_definite(),
            true, e8.is_even() && e8.determinant() == 1);
    r.expect("K3 lattice rank and det", "K3 lattice U^3 + E8(-1)^2", Json::array({"22", "-1"}),
             Json::array({dec(static_cast<long long>(k3.rank())), dec(k3.determinant())}));
    r.expect("Beauville-Bogomolov discriminant group", "disc H^2 = 2", "Z/2", lattice::disc_group(bb).to_string());
    r.expect("NS discriminant", "order-11 Neron-Severi lattice", dec(Integer(2 * 3 * 121)), dec(abs(ns.determinant())));
    r.expect("NS not 11-elementary", "order-11 Neron-Severi lattice", false, lattice::is_p_elementary(ns, 11).elementary);
    const lattice::GramLattice minus_two(IntMatrix{{-2}});
    r.expect("K3(30) + <-60> discriminant", "c2 multiplication lattice", dec(power(2, 24) * power(3, 23) * power(5, 23)),
             dec(abs(lattice::direct_sum(lattice::rescale(k3, 30), lattice::rescale(minus_two, 30)).determinant())));
    r.expect("K3(100) + <-200> discriminant", "u multiplication lattice", dec(power(2, 47) * power(5, 46)),
             dec(abs(lattice::direct_sum(lattice::rescale(k3, 100), lattice::rescale(minus_two, 100)).determinant())));
    return r;
  });
}

Report jordan_report(const fpg::JordanType& type, const JordanOptions& options) {
  return timed([&] {
    Report r("jordan");
    r.inputs()["type"] = fpg::to_json(type);
    r.values()["dimension"] = dec(type.dimension());
    r.values()["invariants"] = dec(type.block_count());
    const auto compare = [&](const std::string& what, const std::function<fpg::JordanType(fpg::Method)>& f) {
      const bool closed_ok = what == "sym2" ? type.closed_form_supported()
                                            : type.closed_form_supported() && options.tensor_with->closed_form_supported();
      const fpg::JordanType oracle = f(fpg::Method::oracle);
      r.values()[what + "_oracle"] = fpg::to_json(oracle);
      if (closed_ok) {
        const fpg::JordanType closed = f(fpg::Method::closed_form);
        r.values()[what + "_closed_form"] = fpg::to_json(closed);
        r.expect(what + " closed form = explicit matrix", "Jordan calculus", fpg::to_json(oracle), fpg::to_json(closed));
      }
    };
    if (options.sym2) compare("sym2", [&](fpg::Method m) { return fpg::sym2_type(type, m); });
    if (options.tensor_with) {
      r.inputs()["tensor_with"] = fpg::to_json(*options.tensor_with);
      compare("tensor", [&](fpg::Method m) { return fpg::tensor_type(type, *options.tensor_with, m); });
    }
    return r;
  });
}

Report jordan_matrix_report(const FpMatrix& g) {
  return timed([&] {
    Report r("jordan");
    r.inputs()["matrix"] = to_json(g);
    const auto t = fpg::jordan_type_of(g);
    r.values()["type"] = fpg::to_json(t);
    r.expect("dimension", "Jordan decomposition", dec(static_cast<long long>(g.rows())), dec(t.dimension()));
    return r;
  });
}

Report cohomology_report(fpg::Prime p, const fpg::JordanType& type, int max_degree) {
  return timed([&] {
    Report r("cohomology");
    r.inputs()["type"] = fpg::to_json(type);
    r.inputs()["max_degree"] = max_degree;
    const auto dims = fpg::cohomology_dims(type, std::max(max_degree, 2));
    Json d = Json::array();
    for (int i = 0; i <= max_degree; ++i) d.push_back(dec(dims[static_cast<std::size_t>(i)]));
    r.values()["dims"] = d;
    const auto tor = fpg::tor_dims(type);
    r.values()["tor0"] = dec(tor.tor0);
    r.values()["tor1"] = dec(tor.tor1);
    const auto explicit_tor = fpg::tor_dims_from_cohomology(p, dims);
    r.expect("Tor from explicit cohomology", "Tor dimensions", Json::array({dec(tor.tor0), dec(tor.tor1)}),
             Json::array({dec(explicit_tor.tor0), dec(explicit_tor.tor1)}));
    return r;
  });
}

Report cohomology_tables_report(fpg::Prime max_prime) {
  return timed([&] {
    Report r("cohomology tables");
    r.inputs()["max_prime"] = dec(static_cast<long long>(max_prime));
    constexpr int kDegrees = 6;
    long long blocks = 0, dim_failures = 0, tor_failures = 0, weighted_failures = 0;
    for (const Prime p : primes_up_to(max_prime)) {
      for (int q = 1; q <= static_cast<int>(p); ++q) {
        ++blocks;
        const auto dims = fpg::cohomology_dims(p, q, kDegrees);
        for (int i = 0; i <= kDegrees; ++i) {
          const Count expected = (q < static_cast<int>(p) || i == 0) ? 1 : 0;
          if (dims[static_cast<std::size_t>(i)] != expected) ++dim_failures;
        }
        const fpg::TorDims formula = fpg::tor_dims(fpg::JordanType::block(p, q));
        if (!(formula == fpg::tor_dims_from_cohomology(p, dims))) ++tor_failures;
        if (!(fpg::weighted_sum_action(p, q) == fpg::weighted_sum_closed_form(p, q))) ++weighted_failures;
      }
    }
    r.values()["blocks_checked"] = dec(blocks);
    r.expect("H^i(G; N_q) = F_p (q < p), H^0 only for q = p", "cohomology of Jordan blocks", "0", dec(dim_failures));
    r.expect("Tor_0, Tor_1 dimensions per block", "Tor dimensions", "0", dec(tor_failures));
    r.expect("weighted sum g + 2g^2 + ... + (p-1)g^(p-1)", "weighted norm identity", "0", dec(weighted_failures));
    return r;
  });
}

Report hilb2_verify_report() {
  return timed([] {
    Report r("hilb2 verify");
    const hilb2::Hilb2Model& model = hilb2::standard_model();
    const IntMatrix& g = model.k3_gram();
    const IntMatrix& mu = model.mu();

    bool even_diag = true;
    for (std::size_t i = 0; i < hilb2::kK3Rank; ++i) even_diag = even_diag && mpz_even_p(mu(i, i).get_mpz_t());
    r.check("mu symmetric, even diagonal, mu G = 1", "diagonal class coefficients",
            mu.is_symmetric() && even_diag && mu * g == IntMatrix::identity(hilb2::kK3Rank), true, true);
    r.values()["mu_independent_entries"] = dec(static_cast<long long>(hilb2::kK3Rank * (hilb2::kK3Rank + 1) / 2));

    const IntMatrix emb = model.sym2_embedding();
    const Integer emb_det = abs(det(emb));
    const SmithForm& s = model.sym2_smith();
    const auto quotient = model.sym2_quotient();
    r.values()["sym2_quotient"] = quotient.to_string();
    r.values()["sym2_quotient_elementary"] = [&] {
      Json j = Json::array();
      for (const auto& [prime, e] : quotient.elementary_divisors()) j.push_back(dec(power(prime.get_ui(), e)));
      return j;
    }();
    std::vector<Integer> expected_factors(22, Integer(2));
    expected_factors.emplace_back(10);
    r.expect("Sym^2 H^2 -> H^4 cokernel invariant factors", "index of Sym^2 H^2 in H^4", dec_list(expected_factors),
             dec_list(s.nontrivial_factors()));
    std::vector<Integer> cyclic(23, Integer(2));
    cyclic.emplace_back(5);
    r.expect("cokernel as abstract group", "index of Sym^2 H^2 in H^4",
             lattice::FiniteAbelianGroup::from_cyclic_orders(cyclic).to_string(), quotient.to_string());
    r.expect("|det| of the embedding", "index of Sym^2 H^2 in H^4", dec(power(2, 23) * 5), dec(emb_det));

    IntVector a_class(hilb2::kH4Rank);
    a_class[hilb2::index_a()] = 1;
    r.expect("order of the class A in the cokernel", "10-divisible class", "10", dec(model.quotient_class_order(a_class)));

    const Integer og = hilb2::ogrady_disc();
    r.expect("disc of Sym^2 H^2 under the O'Grady pairing", "disc Sym^2 H^2", dec(power(2, 46) * 25), dec(og));
    const Integer index = quotient.order();
    r.expect("index^2 = disc Sym^2 H^2", "unimodularity of H^4", dec(og), dec(index * index));

    Json discs = Json::object();
    const std::pair<hilb2::MultMap, Integer> maps[] = {
        {hilb2::MultMap::e2, power(2, 70) * 3},
        {hilb2::MultMap::c2, power(2, 24) * power(3, 23) * power(5, 23)},
        {hilb2::MultMap::u, power(2, 47) * power(5, 46)}};
    for (const auto& [which, expected] : maps) {
      const Integer d = hilb2::mult_map_disc(which);
      discs[hilb2::to_string(which)] = dec(d);
      r.expect(hilb2::to_string(which) + " multiplication map discriminant", "multiplication by " + hilb2::to_string(which),
               dec(expected), dec(d));
    }
    r.values()["mult_map_discs"] = discs;
    const IntMatrix e2 = hilb2::mult_map_gram(hilb2::MultMap::e2);
    const IntMatrix expected_e2 = IntMatrix::block_diagonal(IntMatrix{{48}}, Integer(-8) * g);
    r.check("e2 form = <48> + K3(-8)", "multiplication by e2", e2 == expected_e2, true, e2 == expected_e2);

    const auto top = hilb2::top_intersections();
    r.values()["top_intersections"] = {{"e4", dec(top.e4)}, {"c2_squared", dec(top.c2_squared)}, {"u_squared", dec(top.u_squared)}};
    r.expect("integral of e^4", "multiplication by e2", "192", dec(top.e4));
    r.expect("integral of c2^2", "multiplication by c2", "828", dec(top.c2_squared));
    r.expect("integral of u^2", "multiplication by u", "9200", dec(top.u_squared));
    return r;
  });
}

Report fixedlocus_eval_report(const fixedlocus::ActionParams& params, fixedlocus::Mode mode) {
  return timed([&] {
    Report r("fixedlocus eval");
    r.inputs() = {{"p", dec(static_cast<long long>(params.p))},
                  {"a", dec(params.a)},
                  {"m", dec(params.m)},
                  {"symplectic", params.symplectic},
                  {"mode", fixedlocus::to_string(mode)}};
    if (params.rho) r.inputs()["rho"] = dec(*params.rho);
    const auto rep = fixedlocus::h_star(params, mode);
    r.values()["mode"] = fixedlocus::to_string(rep.mode);
    r.values()["h_star"] = dec(rep.h_star);
    if (rep.closed_form) r.values()["closed_form"] = dec(*rep.closed_form);
    r.values()["assembled"] = dec(rep.assembled);
    r.values()["a4"] = dec(rep.a4);
    r.values()["m4"] = dec(rep.m4);
    Json degrees = Json::object();
    const int labels[] = {0, 2, 4, 6, 8};
    for (std::size_t k = 0; k < rep.jordan.per_degree.size(); ++k)
      degrees[std::to_string(labels[k])] = fpg::to_json(rep.jordan.per_degree[k]);
    r.values()["jordan"] = degrees;
    const bool agree = rep.assembled == rep.from_jordan && (!rep.closed_form || *rep.closed_form == rep.assembled);
    r.check("closed form = assembled form = Jordan count", "fixed-locus formula", agree, dec(rep.assembled),
            rep.closed_form ? dec(*rep.closed_form) : dec(rep.from_jordan));
    if (mode == fixedlocus::Mode::exact) {
      if (params.p == 3 && params.a == 6 && params.m == 6)
        r.expect("h* for a symplectic order-3 action", "27 isolated points", "27", dec(rep.h_star));
      if (params.p == 11 && params.a == 2 && params.m == 2)
        r.expect("h* for the order-11 action", "5 isolated points", "5", dec(rep.h_star));
    }
    return r;
  });
}

Report fixedlocus_enumerate_report(Prime p, std::optional<Count> target) {
  return timed([&] {
    Report r("fixedlocus enumerate");
    r.inputs()["p"] = dec(static_cast<long long>(p));
    if (target) r.inputs()["target"] = dec(*target);
    const auto pairs = fixedlocus::enumerate_admissible(p, target);
    r.values()["pairs"] = pairs_json(pairs);
    r.values()["count"] = dec(static_cast<long long>(pairs.size()));
    bool nonnegative = true;
    for (const auto& x : pairs) nonnegative = nonnegative && x.h_star >= 0;
    r.check("every h* >= 0", "fixed-locus formula", nonnegative, true, nonnegative);
    if (p == 11 && target && *target == 5)
      r.expect("unique parameters with h* = 5", "order-11 parameters", pairs_json({{2, 2, 5}}), pairs_json(pairs));
    if (p == 19 && !target) {
      bool ok = !pairs.empty();
      for (const auto& x : pairs) ok = ok && x.m == 1 && x.a >= 1;
      r.check("only m = 1 and a >= 1", "order-19 parameters", ok, "m = 1, a >= 1", pairs_json(pairs));
    }
    if (p == 3 && !target) {
      bool none_zero = !pairs.empty();
      for (const auto& x : pairs) none_zero = none_zero && x.h_star != 0;
      r.check("no h* equals 0", "fixed points exist", none_zero, true, none_zero);
    }
    return r;
  });
}

Report fixedlocus_identity_report() {
  return timed([] {
    Report r("fixedlocus identity");
    long long checked = 0, mismatches = 0, negative = 0;
    Json per_prime = Json::object();
    for (const Prime p : {3u, 7u, 11u, 13u, 17u, 19u}) {
      long long here = 0;
      const Count step = static_cast<Count>(p) - 1;
      for (Count m = 1; step * m < 23; ++m)
        for (Count a = 0; a <= std::min({m, step * m, 23 - step * m}); ++a) {
          const fixedlocus::ActionParams params{p, a, m, false, std::nullopt};
          if (!fixedlocus::admissibility_error(params).empty()) continue;
          const auto d4 = fixedlocus::degree4_params(params);
          const Count closed = fixedlocus::h_star_closed_form(p, a, m);
          const Count assembled = fixedlocus::h_star_assembled(p, a, m, d4.a4, d4.m4);
          ++here;
          if (closed != assembled) ++mismatches;
          if (closed < 0) ++negative;
        }
      per_prime[std::to_string(p)] = dec(here);
      checked += here;
    }
    r.values()["checked"] = dec(checked);
    r.values()["per_prime"] = per_prime;
    r.expect("closed form = assembled form", "fixed-locus formula", "0", dec(mismatches));
    r.expect("h* >= 0", "fixed-locus formula", "0", dec(negative));
    return r;
  });
}

Report k3_report(Prime p, Count a, Count m, bool has_fixed_point) {
  return timed([&] {
    Report r("k3");
    r.inputs() = {{"p", dec(static_cast<long long>(p))}, {"a", dec(a)}, {"m", dec(m)}, {"has_fixed_point", has_fixed_point}};
    const Count h = fixedlocus::h_star_k3(p, a, m, has_fixed_point);
    r.values()["h_star"] = dec(h);
    if (p == 2 && a == 8) r.expect("symplectic involution", "8 isolated points", "8", dec(h));
    if (p == 3 && a == 6 && m == 6) r.expect("symplectic order-3 action", "6 isolated points", "6", dec(h));
    return r;
  });
}

Report order11_report() {
  return timed([] {
    Report r("order11 verify");
    const auto s = order11::verify_scenario();
    r.values()["pairs"] = pairs_json(s.pairs);
    r.expect("unique (a, m) at p = 11 with h* = 5", "order-11 parameters", pairs_json({{2, 2, 5}}), pairs_json(s.pairs));
    r.values()["disc_ns"] = dec(s.disc_ns);
    r.expect("disc NS", "order-11 Neron-Severi lattice", "726", dec(s.disc_ns));
    r.values()["trans_candidates_from_ns"] = dec_list(s.from_ns);
    r.values()["trans_candidates_from_primitive"] = dec_list(s.from_primitive);
    r.expect("disc Trans", "transcendental discriminant", dec_list({Integer(363)}), dec_list(s.trans_candidates));
    for (const auto* c : {&s.a, &s.b}) {
      Json vs = Json::array();
      for (const auto& v : c->norm_six) vs.push_back({{"vector", vector_json(v.vector)}, {"complement_disc", dec(v.complement_disc)}});
      Json entry = {{"disc", dec(c->disc)},
                    {"disc_group", c->group.to_string()},
                    {"positive_definite", c->positive_definite},
                    {"norm_six_representatives", dec(static_cast<long long>(c->norm_six.size()))},
                    {"norm_six_vectors", dec(static_cast<long long>(2 * c->norm_six.size()))},
                    {"norm_six", vs},
                    {"disc_form_values", form_values_json(c->form_values)}};
      r.values()["lattice_" + c->name] = entry;
      r.expect("disc " + c->name, "invariant lattice candidates", "242", dec(c->disc));
      r.expect(c->name + " positive definite", "invariant lattice candidates", true, c->positive_definite);
      r.expect(c->name + " discriminant group", "invariant lattice candidates", "Z/11 + Z/22", c->group.to_string());
    }
    r.expect("A has no norm-6 vector with complement disc 363", "choice of invariant lattice", false, s.a.attains_target);
    r.expect("B has a norm-6 vector with complement disc 363", "choice of invariant lattice", true, s.b.attains_target);
    r.values()["disc_ns0"] = dec(s.disc_ns0);
    r.values()["disc_forms_isometric"] = s.forms_isometric;
    r.expect("disc NS_0", "Neron-Severi part orthogonal to the Pluecker class", "121", dec(s.disc_ns0));
    r.expect("A and B not isometric", "choice of invariant lattice", false, s.lattices_isometric);
    return r;
  });
}

std::vector<Report> verify_all(unsigned threads) {
  using fixedlocus::ActionParams;
  const std::vector<std::function<Report()>> jobs = {
      [] { return hilb2_verify_report(); },
      [] { return named_lattices_report(); },
      [] { return cohomology_tables_report(19); },
      [] { return fixedlocus_eval_report(ActionParams{3, 6, 6, true, std::nullopt}, fixedlocus::Mode::exact); },
      [] { return fixedlocus_eval_report(ActionParams{11, 2, 2, true, std::nullopt}, fixedlocus::Mode::exact); },
      [] { return fixedlocus_enumerate_report(11, 5); },
      [] { return fixedlocus_enumerate_report(19, std::nullopt); },
      [] { return fixedlocus_enumerate_report(3, std::nullopt); },
      [] { return fixedlocus_identity_report(); },
      [] { return k3_report(2, 8, 8, true); },
      [] { return k3_report(3, 6, 6, true); },
      [] { return order11_report(); },
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(jobs.size()));

  std::vector<std::optional<Report>> slots(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        slots[i] = jobs[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<Report> out;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

unsigned threads_from_env() {
  const char* v = std::getenv("SMITHLAT_THREADS");
  if (!v || !*v) return 0;
  try {
    return static_cast<unsigned>(std::stoul(v));
  } catch (const std::exception&) {
    return 0;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for prime-order actions on Hilbert squares of K3 surfaces", "smithlat"};
  app.require_subcommand(1);
  bool pretty = false;
  std::string out_file;
  app.add_flag("--pretty", pretty, "human-readable text instead of JSON");
  app.add_option("--out", out_file, "write the JSON report to FILE");

  // snf
  auto* snf_cmd = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  std::string snf_in, snf_matrix;
  snf_cmd->add_option("--in", snf_in, "JSON file with the matrix");
  snf_cmd->add_option("--matrix", snf_matrix, "inline JSON matrix, e.g. [[2,4],[6,8]]");

  // lattice
  auto* lat_cmd = app.add_subcommand("lattice", "invariants of an integral lattice");
  std::string lat_name, lat_in, lat_gram, lat_orth;
  std::optional<unsigned long> lat_p;
  std::optional<std::string> lat_short, lat_rescale;
  lat_cmd->add_option("--name", lat_name, "named lattice")->check(CLI::IsMember(lattice::named_lattice_keys()));
  lat_cmd->add_option("--in", lat_in, "JSON file with a Gram matrix");
  lat_cmd->add_option("--gram", lat_gram, "inline JSON Gram matrix");
  lat_cmd->add_option("--p", lat_p, "test p-elementarity");
  lat_cmd->add_option("--short", lat_short, "enumerate vectors of this norm");
  lat_cmd->add_option("--orth", lat_orth, "orthogonal complement of a vector, e.g. 1,0,0");
  lat_cmd->add_option("--rescale", lat_rescale, "multiply the form by n first");

  // jordan
  auto* jor_cmd = app.add_subcommand("jordan", "Jordan types of F_p[Z/p]-modules");
  unsigned jor_p = 0;
  std::string jor_type, jor_tensor, jor_in;
  bool jor_sym2 = false;
  jor_cmd->add_option("--p", jor_p, "prime")->required();
  jor_cmd->add_option("--type", jor_type, "block counts q:n,...");
  jor_cmd->add_option("--in", jor_in, "JSON file with the matrix of a generator");
  jor_cmd->add_flag("--sym2", jor_sym2, "symmetric square");
  jor_cmd->add_option("--tensor", jor_tensor, "tensor with this type");

  // cohomology
  auto* coh_cmd = app.add_subcommand("cohomology", "cohomology of Z/p with coefficients in a module");
  unsigned coh_p = 0;
  std::string coh_type;
  int coh_q = 0, coh_degree = 4;
  bool coh_table = false;
  coh_cmd->add_option("--p", coh_p, "prime");
  coh_cmd->add_option("--q", coh_q, "single Jordan block N_q");
  coh_cmd->add_option("--type", coh_type, "block counts q:n,...");
  coh_cmd->add_option("--max-degree", coh_degree, "highest degree")->check(CLI::Range(0, 1000));
  coh_cmd->add_flag("--table", coh_table, "full tables for every prime up to 19");

  // hilb2
  auto* hilb_cmd = app.add_subcommand("hilb2", "integral cohomology of the Hilbert square of a K3 surface");
  hilb_cmd->require_subcommand(1);
  auto* hilb_verify = hilb_cmd->add_subcommand("verify", "check every number against its target");
  auto* hilb_dump = hilb_cmd->add_subcommand("dump-cup-table", "emit the cup-product table");

  // fixedlocus
  auto* fix_cmd = app.add_subcommand("fixedlocus", "fixed-locus formulas");
  fix_cmd->require_subcommand(1);
  unsigned fx_p = 0;
  Count fx_a = 0, fx_m = 0;
  std::optional<Count> fx_target, fx_rho;
  bool fx_bound = false, fx_symplectic = false, fx_no_fixed = false;
  auto* fix_eval = fix_cmd->add_subcommand("eval", "h* of the fixed locus");
  fix_eval->add_option("--p", fx_p)->required();
  fix_eval->add_option("--a", fx_a)->required();
  fix_eval->add_option("--m", fx_m)->required();
  fix_eval->add_flag("--upper-bound", fx_bound, "bound mode (needed for p = 2, 5)");
  fix_eval->add_flag("--symplectic", fx_symplectic);
  fix_eval->add_option("--rho", fx_rho, "Picard number");
  auto* fix_enum = fix_cmd->add_subcommand("enumerate", "admissible (a, m) for a prime");
  fix_enum->add_option("--p", fx_p)->required();
  fix_enum->add_option("--target", fx_target, "keep pairs with this h*");
  auto* fix_k3 = fix_cmd->add_subcommand("k3", "fixed-locus total on a K3 surface");
  auto* k3_cmd = app.add_subcommand("k3", "same as fixedlocus k3");
  for (auto* c : {fix_k3, k3_cmd}) {
    c->add_option("--p", fx_p)->required();
    c->add_option("--a", fx_a)->required();
    c->add_option("--m", fx_m)->required();
    c->add_flag("--no-fixed-point", fx_no_fixed);
  }

  // order11
  auto* o11_cmd = app.add_subcommand("order11", "the order-11 example");
  o11_cmd->require_subcommand(1);
  auto* o11_verify = o11_cmd->add_subcommand("verify", "replay every step");

  auto* all_cmd = app.add_subcommand("verify-all", "full regression suite");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << app.help();
    return 2;
  }

  const auto emit = [&](const Json& j, const std::string& text, bool ok) {
    if (!out_file.empty()) {
      std::ofstream f(out_file);
      if (!f) throw std::runtime_error("cannot write " + out_file);
      f << j.dump(2) << "\n";
    }
    if (pretty) out << text;
    else if (out_file.empty()) out << j.dump(2) << "\n";
    return ok ? 0 : 1;
  };
  const auto emit_report = [&](const Report& r) { return emit(r.to_json(), r.to_text(), r.pass()); };

  try {
    if (snf_cmd->parsed()) {
      Json j;
      if (!snf_in.empty()) j = read_json_file(snf_in);
      else if (!snf_matrix.empty()) j = Json::parse(snf_matrix);
      else throw std::invalid_argument("snf needs --in or --matrix");
      return emit_report(snf_report(int_matrix_from_json(j)));
    }
    if (lat_cmd->parsed()) {
      LatticeOptions opt;
      opt.p = lat_p;
      if (lat_short) opt.short_norm = Integer(*lat_short);
      if (lat_rescale) opt.rescale = Integer(*lat_rescale);
      if (!lat_orth.empty()) opt.orth = parse_int_vector(lat_orth);
      if (!lat_name.empty()) return emit_report(lattice_report(lat_name, lattice::named_lattice(lat_name), opt));
      Json j;
      if (!lat_in.empty()) j = read_json_file(lat_in);
      else if (!lat_gram.empty()) j = Json::parse(lat_gram);
      else return emit_report(named_lattices_report());
      return emit_report(lattice_report("gram", lattice::GramLattice(int_matrix_from_json(j)), opt));
    }
    if (jor_cmd->parsed()) {
      if (!jor_in.empty()) {
        const Json j = read_json_file(jor_in);
        const FpMatrix g = j.contains("p") ? fp_matrix_from_json(j) : FpMatrix::reduce(jor_p, int_matrix_from_json(j));
        return emit_report(jordan_matrix_report(g));
      }
      if (jor_type.empty()) throw std::invalid_argument("jordan needs --type or --in");
      JordanOptions opt;
      opt.sym2 = jor_sym2;
      if (!jor_tensor.empty()) opt.tensor_with = parse_jordan_type(jor_p, jor_tensor);
      return emit_report(jordan_report(parse_jordan_type(jor_p, jor_type), opt));
    }
    if (coh_cmd->parsed()) {
      if (coh_table) return emit_report(cohomology_tables_report(coh_p ? coh_p : 19));
      if (!coh_p) throw std::invalid_argument("cohomology needs --p");
      const fpg::JordanType t = coh_q ? fpg::JordanType::block(coh_p, coh_q) : parse_jordan_type(coh_p, coh_type);
      return emit_report(cohomology_report(coh_p, t, coh_degree));
    }
    if (hilb_verify->parsed()) return emit_report(hilb2_verify_report());
    if (hilb_dump->parsed()) {
      const Json j = hilb2::cup_table_json(hilb2::standard_model());
      return emit(j, j.dump(2) + "\n", true);
    }
    if (fix_eval->parsed())
      return emit_report(fixedlocus_eval_report(fixedlocus::ActionParams{fx_p, fx_a, fx_m, fx_symplectic, fx_rho},
                                                fx_bound ? fixedlocus::Mode::upper_bound : fixedlocus::Mode::exact));
    if (fix_enum->parsed()) return emit_report(fixedlocus_enumerate_report(fx_p, fx_target));
    if (fix_k3->parsed() || k3_cmd->parsed()) return emit_report(k3_report(fx_p, fx_a, fx_m, !fx_no_fixed));
    if (o11_verify->parsed()) return emit_report(order11_report());
    if (all_cmd->parsed()) {
      const auto start = std::chrono::steady_clock::now();
      const auto reports = verify_all(threads_from_env());
      Json list = Json::array();
      std::string text;
      bool ok = true;
      for (const auto& r : reports) {
        list.push_back(r.to_json());
        text += r.to_text();
        ok = ok && r.pass();
      }
      Json j;
      j["command"] = "verify-all";
      j["reports"] = list;
      j["pass"] = ok;
      j["wall_time"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      text += std::string("verify-all: ") + (ok ? "PASS" : "FAIL") + "\n";
      return emit(j, text, ok);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << app.help();
  return 2;
}

}  // namespace smithlat::cli
