#include "u3/render.hpp"

#include <cstdio>

namespace u3 {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Json doc(const char* kind, Json labels, Json entries) {
    Json j = Json::object();
    j.set("kind", Json::string(kind));
    j.set("labels", std::move(labels));
    j.set("entries", std::move(entries));
    return j;
}

} // namespace

Json render_dim_json(const U3Irrep& g) {
    Json labels = Json::object();
    labels.set("irrep", Json::string(to_string(g)));
    Json entries = Json::array();
    Json e = Json::object();
    e.set("value", Json::number(static_cast<std::int64_t>(dimension(g))));
    entries.push(std::move(e));
    return doc("dim", std::move(labels), std::move(entries));
}

Json render_dim_json(const SU3Irrep& s) {
    Json labels = Json::object();
    labels.set("lambda", Json::number(static_cast<std::int64_t>(s.lambda)));
    labels.set("mu", Json::number(static_cast<std::int64_t>(s.mu)));
    Json entries = Json::array();
    Json e = Json::object();
    e.set("value", Json::number(static_cast<std::int64_t>(dimension(s))));
    entries.push(std::move(e));
    return doc("dim", std::move(labels), std::move(entries));
}

Json render_enumerate_json(const U3Irrep& g) {
    Json labels = Json::object();
    labels.set("irrep", Json::string(to_string(g)));
    Json entries = Json::array();
    for (const GelfandPattern& p : enumerate_patterns(g)) {
        Json e = Json::object();
        e.set("pattern", Json::string(to_string(p)));
        entries.push(std::move(e));
    }
    return doc("enumerate", std::move(labels), std::move(entries));
}

Json render_decompose_json(const U3Irrep& g1, const U3Irrep& g2) {
    Json labels = Json::object();
    labels.set("g1", Json::string(to_string(g1)));
    labels.set("g2", Json::string(to_string(g2)));
    Json entries = Json::array();
    for (const DecompositionEntry& d : decompose(g1, g2)) {
        Json e = Json::object();
        e.set("coupled", Json::string(to_string(d.coupled)));
        e.set("rho_max", Json::number(static_cast<std::int64_t>(d.rho_max)));
        entries.push(std::move(e));
    }
    return doc("decompose", std::move(labels), std::move(entries));
}

Json render_cgc_json(const CGTable& t) {
    Json labels = Json::object();
    labels.set("g1", Json::string(to_string(t.g1())));
    labels.set("g2", Json::string(to_string(t.g2())));
    labels.set("g12", Json::string(to_string(t.coupled())));
    labels.set("tol", Json::number(t.tol()));
    Json entries = Json::array();
    for (int s = 0; s < t.coupled_basis().size(); ++s) {
        for (int rho = 0; rho < t.rho_max(); ++rho) {
            Json e = Json::object();
            e.set("target", Json::string(to_string(t.coupled_basis().state(s))));
            e.set("rho", Json::number(static_cast<std::int64_t>(rho + 1)));
            Json terms = Json::array();
            for (const CGTerm& term : t.terms(s, rho)) {
                Json x = Json::object();
                x.set("left", Json::string(to_string(t.basis1().state(term.i1))));
                x.set("right", Json::string(to_string(t.basis2().state(term.i2))));
                x.set("value", Json::number(term.value));
                terms.push(std::move(x));
            }
            e.set("terms", std::move(terms));
            entries.push(std::move(e));
        }
    }
    return doc("cgc", std::move(labels), std::move(entries));
}

Json render_ucoef_json(const UTensor& t) {
    Json labels = Json::object();
    labels.set("g1", Json::string(to_string(t.g1)));
    labels.set("g2", Json::string(to_string(t.g2)));
    labels.set("g", Json::string(to_string(t.g)));
    labels.set("g3", Json::string(to_string(t.g3)));
    labels.set("g12", Json::string(to_string(t.g12)));
    labels.set("g23", Json::string(to_string(t.g23)));
    Json entries = Json::array();
    if (!t.empty()) {
        for (int r12 = 1; r12 <= t.rho12_max; ++r12)
            for (int r12_3 = 1; r12_3 <= t.rho12_3_max; ++r12_3)
                for (int r23 = 1; r23 <= t.rho23_max; ++r23)
                    for (int r1_23 = 1; r1_23 <= t.rho1_23_max; ++r1_23) {
                        Json e = Json::object();
                        e.set("rho12", Json::number(static_cast<std::int64_t>(r12)));
                        e.set("rho12_3", Json::number(static_cast<std::int64_t>(r12_3)));
                        e.set("rho23", Json::number(static_cast<std::int64_t>(r23)));
                        e.set("rho1_23", Json::number(static_cast<std::int64_t>(r1_23)));
                        e.set("value", Json::number(t(r12, r12_3, r23, r1_23)));
                        entries.push(std::move(e));
                    }
    }
    return doc("ucoef", std::move(labels), std::move(entries));
}

Json render_zcoef_json(const ZTensor& t) {
    Json labels = Json::object();
    labels.set("g2", Json::string(to_string(t.g2)));
    labels.set("g1", Json::string(to_string(t.g1)));
    labels.set("g", Json::string(to_string(t.g)));
    labels.set("g3", Json::string(to_string(t.g3)));
    labels.set("g12", Json::string(to_string(t.g12)));
    labels.set("g13", Json::string(to_string(t.g13)));
    Json entries = Json::array();
    if (!t.empty()) {
        for (int r12 = 1; r12 <= t.rho12_max; ++r12)
            for (int r12_3 = 1; r12_3 <= t.rho12_3_max; ++r12_3)
                for (int r13 = 1; r13 <= t.rho13_max; ++r13)
                    for (int r13_2 = 1; r13_2 <= t.rho13_2_max; ++r13_2) {
                        Json e = Json::object();
                        e.set("rho12", Json::number(static_cast<std::int64_t>(r12)));
                        e.set("rho12_3", Json::number(static_cast<std::int64_t>(r12_3)));
                        e.set("rho13", Json::number(static_cast<std::int64_t>(r13)));
                        e.set("rho13_2", Json::number(static_cast<std::int64_t>(r13_2)));
                        e.set("value", Json::number(t(r12, r12_3, r13, r13_2)));
                        entries.push(std::move(e));
                    }
    }
    return doc("zcoef", std::move(labels), std::move(entries));
}

Json render_nine_json(const NineU3& t) {
    Json labels = Json::object();
    labels.set("g1", Json::string(to_string(t.g1)));
    labels.set("g2", Json::string(to_string(t.g2)));
    labels.set("g12", Json::string(to_string(t.g12)));
    labels.set("g3", Json::string(to_string(t.g3)));
    labels.set("g4", Json::string(to_string(t.g4)));
    labels.set("g34", Json::string(to_string(t.g34)));
    labels.set("g13", Json::string(to_string(t.g13)));
    labels.set("g24", Json::string(to_string(t.g24)));
    labels.set("g", Json::string(to_string(t.g)));
    Json entries = Json::array();
    if (!t.empty()) {
        for (int r12 = 1; r12 <= t.rho12_max; ++r12)
            for (int r34 = 1; r34 <= t.rho34_max; ++r34)
                for (int r13 = 1; r13 <= t.rho13_max; ++r13)
                    for (int r24 = 1; r24 <= t.rho24_max; ++r24)
                        for (int ra = 1; ra <= t.rho12_34_max; ++ra)
                            for (int rb = 1; rb <= t.rho13_24_max; ++rb) {
                                Json e = Json::object();
                                e.set("rho12", Json::number(static_cast<std::int64_t>(r12)));
                                e.set("rho34", Json::number(static_cast<std::int64_t>(r34)));
                                e.set("rho13", Json::number(static_cast<std::int64_t>(r13)));
                                e.set("rho24", Json::number(static_cast<std::int64_t>(r24)));
                                e.set("rho12_34", Json::number(static_cast<std::int64_t>(ra)));
                                e.set("rho13_24", Json::number(static_cast<std::int64_t>(rb)));
                                e.set("value", Json::number(t(r12, r34, r13, r24, ra, rb)));
                                entries.push(std::move(e));
                            }
    }
    return doc("nine", std::move(labels), std::move(entries));
}

Json render_content_json(const SU3Irrep& s) {
    Json labels = Json::object();
    labels.set("lambda", Json::number(static_cast<std::int64_t>(s.lambda)));
    labels.set("mu", Json::number(static_cast<std::int64_t>(s.mu)));
    Json entries = Json::array();
    for (const auto& [L, count] : allowed_L(s)) {
        Json e = Json::object();
        e.set("L", Json::number(static_cast<std::int64_t>(L)));
        e.set("kappa_max", Json::number(static_cast<std::int64_t>(count)));
        entries.push(std::move(e));
    }
    return doc("content", std::move(labels), std::move(entries));
}

Json render_transform_json(const So3Transform& t) {
    Json labels = Json::object();
    const SU3Irrep s = su3_part(t.irrep);
    labels.set("lambda", Json::number(static_cast<std::int64_t>(s.lambda)));
    labels.set("mu", Json::number(static_cast<std::int64_t>(s.mu)));
    labels.set("L", Json::number(static_cast<std::int64_t>(t.L)));
    Json entries = Json::array();
    for (int kappa = 0; kappa < t.kappa_max(); ++kappa) {
        Json e = Json::object();
        e.set("kappa", Json::number(static_cast<std::int64_t>(kappa + 1)));
        Json terms = Json::array();
        for (int c = 0; c < static_cast<int>(t.candidates.size()); ++c) {
            Json x = Json::object();
            x.set("q", Json::number(static_cast<std::int64_t>(t.candidates[c].q)));
            x.set("t", Json::number(static_cast<std::int64_t>(t.candidates[c].t)));
            x.set("pattern", Json::string(to_string(t.pattern(c))));
            x.set("value", Json::number(t.rows(kappa, c)));
            terms.push(std::move(x));
        }
        e.set("terms", std::move(terms));
        entries.push(std::move(e));
    }
    return doc("transform", std::move(labels), std::move(entries));
}

Json render_wigner_json(const WignerTable& t) {
    Json labels = Json::object();
    labels.set("lambda1", Json::number(static_cast<std::int64_t>(t.s1.lambda)));
    labels.set("mu1", Json::number(static_cast<std::int64_t>(t.s1.mu)));
    labels.set("lambda2", Json::number(static_cast<std::int64_t>(t.s2.lambda)));
    labels.set("mu2", Json::number(static_cast<std::int64_t>(t.s2.mu)));
    labels.set("tol", Json::number(t.tol));
    Json entries = Json::array();
    for (const ReducedWignerEntry& r : t.entries) {
        Json e = Json::object();
        e.set("coupled", Json::string(to_string(r.coupled)));
        e.set("rho", Json::number(static_cast<std::int64_t>(r.rho)));
        e.set("kappa1", Json::number(static_cast<std::int64_t>(r.kappa1)));
        e.set("L1", Json::number(static_cast<std::int64_t>(r.L1)));
        e.set("kappa2", Json::number(static_cast<std::int64_t>(r.kappa2)));
        e.set("L2", Json::number(static_cast<std::int64_t>(r.L2)));
        e.set("kappa3", Json::number(static_cast<std::int64_t>(r.kappa3)));
        e.set("L3", Json::number(static_cast<std::int64_t>(r.L3)));
        e.set("value", Json::number(r.value));
        entries.push(std::move(e));
    }
    return doc("wigner", std::move(labels), std::move(entries));
}

std::string render_dim_text(const U3Irrep& g) { return std::to_string(dimension(g)) + "\n"; }

std::string render_dim_text(const SU3Irrep& s) { return std::to_string(dimension(s)) + "\n"; }

std::string render_enumerate_text(const U3Irrep& g) {
    std::string out;
    for (const GelfandPattern& p : enumerate_patterns(g)) out += to_string(p) + "\n";
    return out;
}

std::string render_decompose_text(const U3Irrep& g1, const U3Irrep& g2) {
    std::string out;
    for (const DecompositionEntry& d : decompose(g1, g2))
        out += "[" + std::to_string(d.coupled.n13) + "," + std::to_string(d.coupled.n23) + "," +
               std::to_string(d.coupled.n33) + "] x" + std::to_string(d.rho_max) + "\n";
    return out;
}

std::string render_cgc_text(const CGTable& t) {
    std::string out;
    for (int s = 0; s < t.coupled_basis().size(); ++s)
        for (int rho = 0; rho < t.rho_max(); ++rho)
            for (const CGTerm& term : t.terms(s, rho))
                out += to_string(t.coupled_basis().state(s)) + " rho=" + std::to_string(rho + 1) +
                       " | " + to_string(t.basis1().state(term.i1)) + " x " +
                       to_string(t.basis2().state(term.i2)) + " = " + fmt(term.value) + "\n";
    return out;
}

std::string render_ucoef_text(const UTensor& t) {
    std::string out;
    if (t.empty()) return out;
    for (int r12 = 1; r12 <= t.rho12_max; ++r12)
        for (int r12_3 = 1; r12_3 <= t.rho12_3_max; ++r12_3)
            for (int r23 = 1; r23 <= t.rho23_max; ++r23)
                for (int r1_23 = 1; r1_23 <= t.rho1_23_max; ++r1_23)
                    out += "rho12=" + std::to_string(r12) + " rho12_3=" + std::to_string(r12_3) +
                           " rho23=" + std::to_string(r23) + " rho1_23=" + std::to_string(r1_23) +
                           " = " + fmt(t(r12, r12_3, r23, r1_23)) + "\n";
    return out;
}

std::string render_zcoef_text(const ZTensor& t) {
    std::string out;
    if (t.empty()) return out;
    for (int r12 = 1; r12 <= t.rho12_max; ++r12)
        for (int r12_3 = 1; r12_3 <= t.rho12_3_max; ++r12_3)
            for (int r13 = 1; r13 <= t.rho13_max; ++r13)
                for (int r13_2 = 1; r13_2 <= t.rho13_2_max; ++r13_2)
                    out += "rho12=" + std::to_string(r12) + " rho12_3=" + std::to_string(r12_3) +
                           " rho13=" + std::to_string(r13) + " rho13_2=" + std::to_string(r13_2) +
                           " = " + fmt(t(r12, r12_3, r13, r13_2)) + "\n";
    return out;
}

std::string render_nine_text(const NineU3& t) {
    std::string out;
    if (t.empty()) return out;
    for (int r12 = 1; r12 <= t.rho12_max; ++r12)
        for (int r34 = 1; r34 <= t.rho34_max; ++r34)
            for (int r13 = 1; r13 <= t.rho13_max; ++r13)
                for (int r24 = 1; r24 <= t.rho24_max; ++r24)
                    for (int ra = 1; ra <= t.rho12_34_max; ++ra)
                        for (int rb = 1; rb <= t.rho13_24_max; ++rb)
                            out += "rho12=" + std::to_string(r12) + " rho34=" +
                                   std::to_string(r34) + " rho13=" + std::to_string(r13) +
                                   " rho24=" + std::to_string(r24) + " rho12_34=" +
                                   std::to_string(ra) + " rho13_24=" + std::to_string(rb) +
                                   " = " + fmt(t(r12, r34, r13, r24, ra, rb)) + "\n";
    return out;
}

std::string render_content_text(const SU3Irrep& s) {
    std::string out;
    bool first = true;
    for (const auto& [L, count] : allowed_L(s)) {
        if (!first) out += " ";
        first = false;
        out += "L=" + std::to_string(L) + ":" + std::to_string(count);
    }
    out += "\n";
    return out;
}

std::string render_transform_text(const So3Transform& t) {
    std::string out;
    for (int kappa = 0; kappa < t.kappa_max(); ++kappa)
        for (int c = 0; c < static_cast<int>(t.candidates.size()); ++c)
            out += "kappa=" + std::to_string(kappa + 1) + " q=" +
                   std::to_string(t.candidates[c].q) + " t=" + std::to_string(t.candidates[c].t) +
                   " pattern=" + to_string(t.pattern(c)) + " = " + fmt(t.rows(kappa, c)) + "\n";
    return out;
}

std::string render_wigner_text(const WignerTable& t) {
    std::string out;
    for (const ReducedWignerEntry& r : t.entries)
        out += "coupled=" + to_string(r.coupled) + " rho=" + std::to_string(r.rho) +
               " kappa1=" + std::to_string(r.kappa1) + " L1=" + std::to_string(r.L1) +
               " kappa2=" + std::to_string(r.kappa2) + " L2=" + std::to_string(r.L2) +
               " kappa3=" + std::to_string(r.kappa3) + " L3=" + std::to_string(r.L3) + " = " +
               fmt(r.value) + "\n";
    return out;
}

} // namespace u3
