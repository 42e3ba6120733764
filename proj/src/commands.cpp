/*
 * Copyright 2026 The Cubix Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cubix/commands.hpp"

#include <cstdint>
#include <cstdio>

#include "cubix/cremona.hpp"
#include "cubix/error.hpp"
#include "cubix/structure.hpp"
#include "cubix/variety.hpp"

namespace cubix {

namespace {

Json dims_json(const std::vector<std::size_t>& dims) {
    Json out = Json::array();
    for (auto d : dims) out.push_back(d);
    return out;
}

Json forms_json(const std::vector<Polynomial>& forms) {
    Json out = Json::array();
    for (const auto& f : forms) out.push_back(f.to_string());
    return out;
}

std::string options_tag(const Options& opts) {
    return "seed=" + std::to_string(opts.seed) + ";budget=" + std::to_string(opts.budget);
}

Report start(const std::string& command, const std::string& input, const Options& opts) {
    Report r;
    r.command = command;
    r.digest = digest(input + "\n" + options_tag(opts));
    return r;
}

Json pair_json(const CremonaPair& p) {
    return Json{{"F", to_json(p.f)}, {"G", to_json(p.g)}, {"N", to_json(p.n)}, {"M", to_json(p.m)},
                {"B_F", to_json(p.bf)}, {"B_G", to_json(p.bg)}};
}

void record_pair(Report& r, const CremonaPair& p) {
    PairCheck c = verify_pair(p);
    r.record("G(F(x)) = N(x) x", c.g_of_f);
    r.record("F(G(y)) = M(y) y", c.f_of_g);
    r.record("M(F(x)) = N(x)^2", c.m_of_f);
    r.record("dN_x = B_F(F(x), dx)", c.crucial_f);
    r.record("dM_y = B_G(G(y), dy)", c.crucial_g);
}

const CatalogEntry& rank_three_entry(const AlgebraSource& src) {
    if (!src.entry || !src.entry->rank_three()) fail(Errc::NotRankThree, src.label + " is not a rank-3 catalog entry");
    return *src.entry;
}

}  // namespace

void Report::record(std::string check, bool pass, std::size_t samples) {
    ledger.push_back({std::move(check), pass, samples});
}

bool Report::passed() const {
    for (const auto& e : ledger)
        if (!e.pass) return false;
    return true;
}

Json Report::to_json() const {
    Json l = Json::array();
    for (const auto& e : ledger) l.push_back(Json{{"check", e.check}, {"pass", e.pass}, {"samples", e.samples}});
    return Json{{"command", command}, {"digest", digest}, {"results", results}, {"ledger", std::move(l)},
                {"passed", passed()}};
}

std::string Report::to_text() const {
    std::string out = "command: " + command + "\ndigest: " + digest + "\n";
    for (const auto& [key, value] : results.items()) {
        if (value.is_array() && !value.empty() && value.front().is_object()) {
            out += key + ":\n";
            for (const auto& item : value) out += "  " + item.dump() + "\n";
        } else {
            out += key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
        }
    }
    for (const auto& e : ledger)
        out += std::string(e.pass ? "PASS " : "FAIL ") + e.check + " (" + std::to_string(e.samples) + ")\n";
    out += passed() ? "all checks passed\n" : "some checks failed\n";
    return out;
}

std::string digest(const std::string& text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

AlgebraSource load_named(const std::string& name) {
    CatalogEntry e = make_named(name);
    return {name, e.algebra, e};
}

AlgebraSource load_algebra_text(const std::string& label, const std::string& json_text) {
    return {label, algebra_from_json(parse_json(json_text)), std::nullopt};
}

Report cmd_catalog(const Options& opts) {
    Report r = start("catalog", "", opts);
    Json entries = Json::array();
    for (const auto& name : catalog_names()) {
        CatalogEntry e = make_named(name);
        std::size_t rk = rank(e.algebra, opts);
        entries.push_back(Json{{"name", name}, {"dim", e.algebra.dim()}, {"rank", rk}, {"description", e.description}});
        r.record(name + " has rank " + std::to_string(e.expected_rank), rk == e.expected_rank);
    }
    r.results["entries"] = std::move(entries);
    return r;
}

Report cmd_inspect(const AlgebraSource& src, const Options& opts) {
    Report r = start("inspect " + src.label, to_json(src.algebra).dump(), opts);
    const Algebra& a = src.algebra;
    std::size_t rk = rank(a, opts);
    r.results["name"] = src.label;
    r.results["dim"] = a.dim();
    r.results["rank"] = rk;
    if (src.entry) r.record("rank matches the catalog", rk == src.entry->expected_rank);

    JordanCheck jc = check_jordan(a, opts);
    r.record(jc.symbolic ? "Jordan identity (all basis triples and sampled pairs)" : "Jordan identity (sampled pairs)",
             jc.holds, jc.pairs);

    if (rk != 3) {
        if (!src.entry || !src.entry->designated_norm)
            fail(Errc::NotRankThree, src.label + " has rank " + std::to_string(rk));
        const Polynomial& eta = *src.entry->designated_norm;
        r.results["designated_norm"] = eta.to_string();
        r.results["normed_map"] = forms_json(src.entry->normed_map->forms());
        bool compatible = true;
        try {
            bf_solve(*src.entry->normed_map, eta);
        } catch (const Error& e) {
            if (e.code() != Errc::NoSolution) throw;
            compatible = false;
        }
        r.record("dN lies in the span of the normed map", compatible);
        r.results["radical_dim"] = nullspace_auto(third_derivatives(eta)).dim();
        return r;
    }

    CubicData d = src.entry ? entry_cubic_data(*src.entry, opts) : cubic_data(a, opts);
    bool interpolated = !src.entry || cubic_data_cost(a.dim()) <= opts.budget || !src.entry->closed_norm;
    r.results["cubic_data"] = interpolated ? "interpolated" : "closed-form norm";
    r.results["trace"] = d.trace.to_string();
    r.results["norm"] = d.norm.to_string();
    IdentityTally t = check_cubic_identities(a, d, 20, opts);
    r.record("Cayley-Hamilton", t.cayley_hamilton == 0, t.points);
    r.record("(x^#)^# = N(x) x", t.adjoint_involution == 0, t.points);
    r.record("U_x(y) = T(x, y) x - x^# # y", t.u_operator == 0, t.points);
    r.record("N(x^#) = N(x)^2", t.norm_of_adjoint == 0, t.points);
    r.record("T(x, x^#) = 3 N(x)", t.trace_of_adjoint == 0, t.points);

    Decomposition dec = decompose(a, d, opts);
    r.results["radical_dim"] = dec.radical.dim();
    r.results["penico_dims"] = dims_json(dec.penico.dims());
    r.results["ss_rank"] = dec.ss_rank;
    r.results["ss_dim"] = dec.ss_dim;
    r.results["section_found"] = dec.section.has_value();
    r.results["ss_norm"] = dec.ss_norm.to_string();

    bool ideals = true;
    for (const auto& term : dec.penico.terms) ideals = ideals && is_ideal(a, term);
    r.record("every Penico term is an ideal", ideals, dec.penico.terms.size());
    if (src.entry) {
        const CatalogEntry& e = *src.entry;
        if (e.expected_radical_dim) r.record("radical dimension matches the catalog", dec.radical.dim() == *e.expected_radical_dim);
        if (!e.expected_penico.empty()) r.record("Penico profile matches the catalog", dec.penico.dims() == e.expected_penico);
        if (e.expected_ss_signature)
            r.record("semi-simple signature matches the catalog",
                     std::make_pair(dec.ss_rank, dec.ss_dim) == *e.expected_ss_signature);
        if (e.closed_norm) r.record("norm equals the closed form", d.norm == *e.closed_norm);
        if (e.closed_adjoint) r.record("adjoint equals the closed form", d.adjoint == *e.closed_adjoint);
    }
    return r;
}

Report cmd_roundtrip(const std::string& name, const Options& opts) {
    Report r = start("roundtrip " + name, name, opts);
    AlgebraSource src = load_named(name);
    const CatalogEntry& e = rank_three_entry(src);
    CubicData d = entry_cubic_data(e, opts);
    CremonaPair p = adjoint_pair(d);
    record_pair(r, p);

    MapAlgebra at_unit = algebra_from_map(p, d.unit, opts);
    r.record("structure constants reproduced at the unit", at_unit.algebra == e.algebra);

    auto sig = ss_signature(e.algebra, d, opts);
    r.results["ss_signature"] = Json::array({sig.first, sig.second});
    SampleStream stream = SampleStream(opts.seed).fork(0x52545250);
    Json bases = Json::array();
    for (int found = 0, tries = 0; found < 3 && tries < 100; ++tries) {
        Vector u = stream.next_vector(d.dim());
        if (sgn(d.norm.eval(u)) == 0) continue;
        ++found;
        MapAlgebra iso = algebra_from_map(p, u, opts);
        auto s = ss_signature(iso.algebra, iso.cubic, opts);
        bases.push_back(Json{{"base", to_json(u)}, {"ss_signature", Json::array({s.first, s.second})}});
        r.record("ss signature preserved at base " + to_string(u), s == sig);
    }
    r.results["bases"] = std::move(bases);
    return r;
}

Report cmd_cremona_certify(const std::string& json_text, const Options& opts) {
    Report r = start("cremona certify", json_text, opts);
    QuadraticMap f = quadratic_map_from_json(parse_json(json_text));
    try {
        CremonaPair p = certify(f, opts);
        r.results["verdict"] = "bidegree (2,2)";
        r.results["pair"] = pair_json(p);
        record_pair(r, p);
    } catch (const Error& e) {
        if (e.code() != Errc::NotBirational22 && e.code() != Errc::Fake) throw;
        r.results["verdict"] = std::string(errc_name(e.code()));
        r.results["detail"] = e.what();
        r.record("certified as bidegree (2,2)", false);
    }
    return r;
}

Report cmd_cremona_ekp(const std::string& json_text, const Options& opts) {
    Report r = start("cremona ekp", json_text, opts);
    Polynomial cubic = polynomial_from_json(parse_json(json_text));
    if (!cubic.is_homogeneous(3) || cubic.is_zero()) fail(Errc::ParseError, "expected a nonzero cubic form");
    EkpResult res = ekp_check(cubic, opts);
    r.results["verdict"] = verdict_name(res.verdict);
    r.results["detail"] = res.detail;
    if (res.pair) {
        r.results["N"] = res.pair->n.to_string();
        r.results["inverse"] = forms_json(res.pair->g.forms());
        record_pair(r, *res.pair);
    }
    return r;
}

Report cmd_cremona_structure(const StructureInput& in, const Options& opts) {
    if (in.algebra.has_value() == in.map_json.has_value()) fail(Errc::ParseError, "give exactly one of an algebra name and a map");
    std::string input = in.algebra ? *in.algebra : *in.map_json;
    if (in.theta_json) input += "\n" + *in.theta_json;
    Report r = start("cremona structure", input, opts);

    CremonaPair p;
    std::optional<AlgebraSource> src;
    std::optional<CubicData> d;
    if (in.algebra) {
        src = load_named(*in.algebra);
        d = entry_cubic_data(rank_three_entry(*src), opts);
        p = adjoint_pair(*d);
    } else {
        p = certify(quadratic_map_from_json(parse_json(*in.map_json)), opts);
    }
    record_pair(r, p);
    r.results["N"] = p.n.to_string();

    Subspace rf = map_radical(p);
    MapPenico pen = map_penico(p);
    r.results["radical_dim"] = rf.dim();
    r.results["penico_dims"] = dims_json(pen.dims());
    r.record("radical ideal criterion on every Penico term", pen.ideal_criterion, pen.f_terms.size());
    if (d) {
        r.record("map radical matches the algebra radical", rf == radical(src->algebra, *d));
        r.record("map Penico profile matches the algebra", pen.dims() == penico_series(src->algebra, *d).dims());
    }

    bool quotient_ok = true;
    try {
        SsPart ss = map_ss_part(p);
        r.results["ss_map"] = forms_json(ss.quotient.f.forms());
        r.results["ss_norm"] = ss.quotient.eta.to_string();
        r.results["cross"] = forms_json(ss.cross);
        r.results["hat"] = forms_json(ss.hat);
    } catch (const Error& e) {
        if (e.code() != Errc::QuotientIllDefined) throw;
        quotient_ok = false;
        r.results["ss_error"] = e.what();
    }
    r.record("F(x + r) - F(x) lies in R_G and N descends", quotient_ok);

    if (in.theta_json) {
        Matrix theta = matrix_from_json(parse_json(*in.theta_json));
        try {
            Matrix ts = structure_transporter(p, theta);
            Rational eta = structure_character(p.n, theta);
            r.results["member"] = true;
            r.results["theta_sharp"] = to_json(ts);
            r.results["eta"] = to_json(eta);
            r.record("F o theta = theta^# o F", p.f.precompose(theta) == p.f.transformed(ts, Matrix::identity(p.dim())));
        } catch (const Error& e) {
            if (e.code() != Errc::NotInStructureGroup) throw;
            r.results["member"] = false;
        }
    }
    return r;
}

Report cmd_variety_check(const std::string& name, std::size_t triples, const Options& opts) {
    Report r = start("variety check " + name + " " + std::to_string(triples), name, opts);
    AlgebraSource src = load_named(name);
    CubicData d = entry_cubic_data(rank_three_entry(src), opts);
    std::size_t n = d.dim();
    CremonaPair p = adjoint_pair(d);
    Polynomial q = tangent_quartic(d);
    SampleStream stream = SampleStream(opts.seed).fork(0x56415254);

    std::size_t mu_ok = 0, q_ok = 0;
    const std::size_t points = 20;
    for (std::size_t i = 0; i < points; ++i) {
        ProjPoint m = mu(d, stream.next_vector(n));
        mu_ok += on_variety(d, m);
        q_ok += sgn(q.eval(m.coords)) == 0;
    }
    r.record("mu(x) on the variety", mu_ok == points, points);
    r.record("Q(mu(x)) = 0", q_ok == points, points);

    std::size_t found = 0, on_curve = 0;
    bool residues_zero = true;
    Json residues = Json::array();
    for (std::size_t k = 0; k < triples; ++k) {
        Vector x1 = stream.next_vector(n), x2 = stream.next_vector(n), x3 = stream.next_vector(n);
        try {
            CubicCurve c = cubic_through(d, p, x1, x2, x3);
            ++found;
            Polynomial res = restrict_to_curve(q, c);
            residues_zero = residues_zero && res.is_zero();
            residues.push_back(res.to_string());
            bool ok = c.degree() == 3 && proj_equal(c.at(0), mu(d, x1)) && proj_equal(c.at(1), mu(d, x2)) &&
                      proj_equal(c.leading(), mu(d, x3));
            for (const auto& t : c.chart_parameters(5)) ok = ok && on_variety(d, c.at(t));
            on_curve += ok;
        } catch (const Error& e) {
            if (e.code() != Errc::NonGenericTriple) throw;
        }
    }
    r.results["triples"] = triples;
    r.results["curves_found"] = found;
    r.results["quartic_residues"] = residues;
    r.record("some triple is generic", triples == 0 || found > 0, triples);
    r.record("Q vanishes along every curve", residues_zero, found);
    r.record("curves are cubics through their points on the variety", on_curve == found, found);

    Subspace vertex = quartic_vertex(q);
    r.results["vertex_dim"] = vertex.dim();
    r.record("vertex of Q is 0 + Rad + Rad + 0", vertex == radical_vertex(radical(src.algebra, d)));
    return r;
}

}  // namespace cubix
