// Command-line surface: parse ring/module/complex descriptions, run the
// duality functors and the Adams machinery over degree windows, and drive
// the invariant suite. Exit codes: 0 success, 1 invariant-suite failure,
// 2 input error.

#include "CLI11.hpp"

#include "lodual/catalog.hpp"
#include "lodual/functors.hpp"
#include "lodual/parser.hpp"
#include "lodual/resolution.hpp"
#include "lodual/verify.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace lodual;

namespace {

struct Common {
    int tmin = -60;
    int tmax = 60;
    int kmax = 8;
    std::string format = "text";
    std::string out;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--tmin", c.tmin, "window lower bound (default -60)");
    cmd->add_option("--tmax", c.tmax, "window upper bound (default 60)");
    cmd->add_option("--kmax", c.kmax, "tower stage cap (default 8)");
    cmd->add_option("--format", c.format, "output format: text | tsv | chart")
        ->check(CLI::IsMember({"text", "tsv", "chart"}));
    cmd->add_option("--out", c.out, "write output to a file instead of stdout");
}

void emit(const Common& c, const std::string& payload) {
    if (c.out.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot open output file '" + c.out + "'");
    f << payload;
}

DegreeWindow window_of(const Common& c) {
    return DegreeWindow(c.tmin, c.tmax); // throws on tmin > tmax -> exit 2
}

std::string format_homology(const WindowedHomology& h, const Common& c) {
    std::ostringstream os;
    if (c.format == "tsv") {
        os << "s\tt\tdim\ttrusted\n";
        for (int s = h.s_min; s <= h.s_max; ++s)
            for (int t = h.window.t_min; t <= h.window.t_max; ++t) {
                std::size_t d = h.dim(s, t);
                bool tr = h.trusted(s, t);
                if (d == 0 && tr)
                    continue;
                os << s << "\t" << t << "\t" << d << "\t" << (tr ? 1 : 0) << "\n";
            }
        return os.str();
    }
    os << "nonzero homology (s, t) -> dim:\n";
    bool any = false;
    for (const auto& [st, d] : h.dims) {
        os << "  (" << st.first << ", " << st.second << ") -> " << d
           << (h.trusted(st.first, st.second) ? "" : "   [untrusted]") << "\n";
        any = true;
    }
    if (!any)
        os << "  (none)\n";
    if (!h.untrusted.empty()) {
        os << "untrusted degrees:";
        for (const auto& st : h.untrusted)
            os << " (" << st.first << "," << st.second << ")";
        os << "\n";
    }
    return os.str();
}

std::string format_functor(const FunctorResult& r, const Common& c) {
    std::ostringstream os;
    os << "functor: " << tag_name(r.tag) << "\n";
    os << "input: " << r.input << "\n";
    os << "window: [" << r.homology.window.t_min << ", " << r.homology.window.t_max << "]\n";
    os << format_homology(r.homology, c);
    if (!r.stabilized_at.empty() && c.format != "tsv") {
        os << "stabilization certificate (nonzero trusted degrees):\n";
        for (const auto& [st, d] : r.homology.dims)
            if (r.homology.trusted(st.first, st.second)) {
                auto it = r.stabilized_at.find(st);
                if (it != r.stabilized_at.end())
                    os << "  (" << st.first << ", " << st.second << ") stable from stage "
                       << it->second << "\n";
            }
    }
    if (r.tag == FunctorTag::lambda && c.format != "tsv")
        os << "lim^1: 0 on every trusted degree (Mittag-Leffler certified)\n";
    for (const auto& [st, raw] : r.raw_tower) {
        os << "raw tower at (" << st.first << ", " << st.second << "):";
        for (std::size_t v : raw)
            os << " " << v;
        os << "\n";
    }
    return os.str();
}

std::string format_e2(const E2Page& page, const Common& c) {
    std::ostringstream os;
    if (c.format == "tsv") {
        os << "s\tt\tdim\n";
        for (const auto& [st, v] : page.entries)
            os << st.first << "\t" << st.second << "\t" << v << "\n";
        return os.str();
    }
    os << "E2 page (rank bound r = " << page.rank_bound << ")\n";
    os << "vanishing line: " << (page.vanishing_certified ? "certified" : "VIOLATED")
       << " (E2^{s,t} = 0 for s > " << page.rank_bound << ")\n";
    os << "collapse: " << (page.collapse_certified
                               ? "certified (columns within two adjacent s; all d_rho vanish)"
                               : "not certified")
       << "\n";
    os << "abutment: " << page.abutment_note << "\n";
    if (c.format == "chart") {
        int tlo = page.window.t_max, thi = page.window.t_min;
        for (const auto& [st, v] : page.entries) {
            tlo = std::min(tlo, st.second);
            thi = std::max(thi, st.second);
        }
        if (tlo > thi) {
            os << "(empty page)\n";
            return os.str();
        }
        os << "chart (s rows, t columns " << tlo << ".." << thi << "):\n";
        for (int s = static_cast<int>(page.rank_bound); s >= 0; --s) {
            os << "s=" << s << " |";
            for (int t = tlo; t <= thi; ++t) {
                std::size_t v = page.dim(s, t);
                if (v == 0)
                    os << " .";
                else
                    os << " " << v;
            }
            os << (s == static_cast<int>(page.rank_bound) ? "   <- vanishing line s = r" : "")
               << "\n";
        }
        os << "     +";
        for (int t = tlo; t <= thi; ++t)
            os << "--";
        os << "\n";
    } else {
        for (const auto& [st, v] : page.entries)
            os << "  (" << st.first << ", " << st.second << ") -> " << v << "\n";
    }
    return os.str();
}

const GradedModulePresentation& pick_module(const ParsedFile& pf, const std::string& name) {
    if (!name.empty()) {
        const auto* m = pf.module(name);
        if (!m)
            throw std::invalid_argument("no module named '" + name + "' in input");
        return *m;
    }
    if (pf.modules.empty())
        throw std::invalid_argument("input contains no module");
    return pf.modules.front().second;
}

FunctorInput pick_input(const ParsedFile& pf, const std::string& object,
                        const std::string& catalog_name) {
    if (!catalog_name.empty()) {
        RingPtr ring = classifying_ring(catalog_entry(catalog_name));
        return FunctorInput::module(GradedModulePresentation::unit(ring));
    }
    if (!object.empty()) {
        if (const auto* m = pf.module(object))
            return FunctorInput::module(*m);
        if (const auto* c = pf.complex(object))
            return FunctorInput::complex(*c, c->ring());
        throw std::invalid_argument("no module or complex named '" + object + "' in input");
    }
    if (!pf.modules.empty())
        return FunctorInput::module(pf.modules.front().second);
    if (!pf.complexes.empty())
        return FunctorInput::complex(pf.complexes.front().second,
                                     pf.complexes.front().second.ring());
    throw std::invalid_argument("input contains no module or complex");
}

int run_functor_command(FunctorTag tag, const std::string& file, const std::string& object,
                        const std::string& catalog_name, const Common& c) {
    DegreeWindow w = window_of(c);
    ParsedFile pf;
    if (!file.empty())
        pf = parse_file(file);
    FunctorInput in = pick_input(pf, object, catalog_name);
    FunctorOptions fopt;
    fopt.k_max = c.kmax;
    FunctorResult r;
    switch (tag) {
    case FunctorTag::gamma: r = gamma(in, w, fopt); break;
    case FunctorTag::lambda: r = lambda_completion(in, w, fopt); break;
    case FunctorTag::localize: r = localize_away(in, w, fopt); break;
    }
    emit(c, format_functor(r, c));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"lodual: exact local duality and Adams E2 computations over Q[y_1..y_r]"};
    app.require_subcommand(1);

    // ring
    auto* cmd_ring = app.add_subcommand("ring", "parse and summarize a ring");
    std::string ring_file, ring_name;
    Common ring_c;
    cmd_ring->add_option("file", ring_file, "input file")->required();
    cmd_ring->add_option("--name", ring_name, "ring name (default: first in file)");
    add_common(cmd_ring, ring_c);

    // hilbert
    auto* cmd_hilb = app.add_subcommand("hilbert", "Hilbert function of a ring or module");
    std::string hilb_file, hilb_object;
    Common hilb_c;
    cmd_hilb->add_option("file", hilb_file, "input file")->required();
    cmd_hilb->add_option("--object", hilb_object, "module name (default: first module, else ring)");
    add_common(cmd_hilb, hilb_c);

    // koszul
    auto* cmd_kos = app.add_subcommand("koszul", "Koszul complex of the augmentation ideal");
    std::string kos_file, kos_catalog;
    int kos_k = 1;
    Common kos_c;
    cmd_kos->add_option("file", kos_file, "input file with a ring");
    cmd_kos->add_option("--catalog", kos_catalog, "use a catalog entry's classifying ring");
    cmd_kos->add_option("--k", kos_k, "generator power (default 1)");
    add_common(cmd_kos, kos_c);

    // gamma / lambda / localize
    struct FunctorCmd {
        CLI::App* cmd;
        std::string file, object, catalog;
        Common c;
    };
    FunctorCmd fc_gamma, fc_lambda, fc_loc;
    auto add_functor = [&](FunctorCmd& fc, const char* name, const char* help) {
        fc.cmd = app.add_subcommand(name, help);
        fc.cmd->add_option("file", fc.file, "input file");
        fc.cmd->add_option("--object", fc.object, "module or complex name");
        fc.cmd->add_option("--catalog", fc.catalog, "unit module over a catalog ring");
        add_common(fc.cmd, fc.c);
    };
    add_functor(fc_gamma, "gamma", "I-torsion functor (local cohomology)");
    add_functor(fc_lambda, "lambda", "derived completion (local homology)");
    add_functor(fc_loc, "localize", "localization away from I");

    // resolve
    auto* cmd_res = app.add_subcommand("resolve", "minimal free resolution");
    std::string res_file, res_object;
    Common res_c;
    cmd_res->add_option("file", res_file, "input file")->required();
    cmd_res->add_option("--object", res_object, "module name");
    add_common(cmd_res, res_c);

    // ext
    auto* cmd_ext = app.add_subcommand("ext", "bigraded Ext of two modules");
    std::string ext_file, ext_of, ext_into;
    Common ext_c;
    cmd_ext->add_option("file", ext_file, "input file")->required();
    cmd_ext->add_option("--of", ext_of, "source module")->required();
    cmd_ext->add_option("--into", ext_into, "target module")->required();
    add_common(cmd_ext, ext_c);

    // adams
    auto* cmd_adams = app.add_subcommand("adams", "Adams E2 page with certificates");
    std::string adams_file, adams_of, adams_into;
    Common adams_c;
    cmd_adams->add_option("file", adams_file, "input file")->required();
    cmd_adams->add_option("--of", adams_of, "source module")->required();
    cmd_adams->add_option("--into", adams_into, "target module")->required();
    add_common(cmd_adams, adams_c);

    // oracle
    auto* cmd_oracle = app.add_subcommand("oracle", "Hom-complex abutment totals");
    std::string or_file, or_of, or_into;
    Common or_c;
    cmd_oracle->add_option("file", or_file, "input file")->required();
    cmd_oracle->add_option("--of", or_of, "source complex")->required();
    cmd_oracle->add_option("--into", or_into, "target complex")->required();
    add_common(cmd_oracle, or_c);

    // catalog
    auto* cmd_cat = app.add_subcommand("catalog", "list or show loop space entries");
    std::string cat_action = "list", cat_name;
    std::vector<int> cat_degrees;
    Common cat_c;
    cmd_cat->add_option("action", cat_action, "list | show")->check(CLI::IsMember({"list", "show"}));
    cmd_cat->add_option("name", cat_name, "entry name for 'show'");
    cmd_cat->add_option("--degrees", cat_degrees,
                        "user-defined entry: the degree list d_1 .. d_r");
    add_common(cmd_cat, cat_c);

    // verify
    auto* cmd_ver = app.add_subcommand("verify", "run the invariant suite");
    std::vector<std::string> ver_rings;
    std::string ver_mutate;
    Common ver_c;
    cmd_ver->add_option("--rings", ver_rings, "catalog names (default: all of rank <= 2)");
    cmd_ver->add_option("--mutate", ver_mutate, "fault injection: 'koszul-sign'")
        ->check(CLI::IsMember({"koszul-sign"}));
    add_common(cmd_ver, ver_c);

    try {
        app.parse(argc, argv);

        if (*cmd_ring) {
            ParsedFile pf = parse_file(ring_file);
            RingPtr ring = ring_name.empty()
                               ? (pf.rings.empty() ? nullptr : pf.rings.front().second)
                               : pf.ring(ring_name);
            if (!ring)
                throw std::invalid_argument("no ring found in input");
            std::ostringstream os;
            os << "ring: " << ring->name() << "\nrank: " << ring->rank() << "\n";
            for (std::size_t i = 0; i < ring->rank(); ++i)
                os << "  gen " << ring->generator_name(i) << " degree "
                   << ring->generator_degree(i) << "\n";
            emit(ring_c, os.str());
            return 0;
        }
        if (*cmd_hilb) {
            DegreeWindow w = window_of(hilb_c);
            ParsedFile pf = parse_file(hilb_file);
            std::ostringstream os;
            std::map<int, long> h;
            if (hilb_object.empty() && pf.modules.empty()) {
                if (pf.rings.empty())
                    throw std::invalid_argument("input has neither ring nor module");
                h = hilbert_coefficients(*pf.rings.front().second, w);
                os << "hilbert coefficients of " << pf.rings.front().first << ":\n";
            } else {
                const auto& m = pick_module(pf, hilb_object);
                h = hilbert_function(m, w);
                os << "hilbert function of " << m.name() << ":\n";
            }
            if (hilb_c.format == "tsv") {
                std::ostringstream ts;
                ts << "t\tdim\n";
                for (const auto& [t, d] : h)
                    ts << t << "\t" << d << "\n";
                emit(hilb_c, ts.str());
            } else {
                for (const auto& [t, d] : h)
                    if (d != 0)
                        os << "  t=" << t << " -> " << d << "\n";
                emit(hilb_c, os.str());
            }
            return 0;
        }
        if (*cmd_kos) {
            DegreeWindow w = window_of(kos_c);
            RingPtr ring;
            if (!kos_catalog.empty())
                ring = classifying_ring(catalog_entry(kos_catalog));
            else if (!kos_file.empty()) {
                ParsedFile pf = parse_file(kos_file);
                if (pf.rings.empty())
                    throw std::invalid_argument("no ring in input");
                ring = pf.rings.front().second;
            } else
                throw std::invalid_argument("koszul needs a file or --catalog");
            KoszulComplex K = koszul(ring, kos_k);
            std::ostringstream os;
            os << "koszul complex " << K.complex.name() << " over " << ring->name() << "\n";
            for (int s = K.complex.s_max(); s >= K.complex.s_min(); --s) {
                os << "  s=" << s << " rank " << K.complex.rank(s) << " shifts:";
                for (int u : K.complex.term(s))
                    os << " " << u;
                os << "\n";
            }
            os << "self-duality shift a = " << self_duality_check(K) << "\n";
            WindowedHomology h = homology(K.complex, w);
            os << format_homology(h, kos_c);
            emit(kos_c, os.str());
            return 0;
        }
        if (*fc_gamma.cmd)
            return run_functor_command(FunctorTag::gamma, fc_gamma.file, fc_gamma.object,
                                       fc_gamma.catalog, fc_gamma.c);
        if (*fc_lambda.cmd)
            return run_functor_command(FunctorTag::lambda, fc_lambda.file, fc_lambda.object,
                                       fc_lambda.catalog, fc_lambda.c);
        if (*fc_loc.cmd)
            return run_functor_command(FunctorTag::localize, fc_loc.file, fc_loc.object,
                                       fc_loc.catalog, fc_loc.c);
        if (*cmd_res) {
            DegreeWindow w = window_of(res_c);
            ParsedFile pf = parse_file(res_file);
            const auto& m = pick_module(pf, res_object);
            FreeResolution r = minimal_resolution(m, w);
            std::ostringstream os;
            os << "minimal free resolution of " << m.name() << " (length " << r.length() << ")\n";
            os << "minimal: " << (r.minimal ? "yes" : "NO") << ", exact on probe ["
               << r.probe.t_min << ", " << r.probe.t_max << "]: "
               << (r.exact_on_probe ? "yes" : "NO") << "\n";
            for (std::size_t s = 0; s < r.shifts.size(); ++s) {
                os << "  F_" << s << " shifts:";
                for (int u : r.shifts[s])
                    os << " " << u;
                os << "\n";
            }
            os << "betti (s, t) -> count:\n";
            for (const auto& [st, v] : r.betti())
                os << "  (" << st.first << ", " << st.second << ") -> " << v << "\n";
            emit(res_c, os.str());
            return 0;
        }
        if (*cmd_ext) {
            DegreeWindow w = window_of(ext_c);
            ParsedFile pf = parse_file(ext_file);
            const auto& m = pick_module(pf, ext_of);
            const auto& n = pick_module(pf, ext_into);
            auto table = ext(m, n, w);
            std::ostringstream os;
            if (ext_c.format == "tsv") {
                os << "s\tt\tdim\n";
                for (const auto& [st, v] : table)
                    os << st.first << "\t" << st.second << "\t" << v << "\n";
            } else {
                os << "Ext(" << m.name() << ", " << n.name() << ") on [" << w.t_min << ", "
                   << w.t_max << "]:\n";
                for (const auto& [st, v] : table)
                    os << "  (" << st.first << ", " << st.second << ") -> " << v << "\n";
            }
            emit(ext_c, os.str());
            return 0;
        }
        if (*cmd_adams) {
            DegreeWindow w = window_of(adams_c);
            ParsedFile pf = parse_file(adams_file);
            const auto& m = pick_module(pf, adams_of);
            const auto& n = pick_module(pf, adams_into);
            E2Page page = adams_e2(m, n, w);
            emit(adams_c, format_e2(page, adams_c));
            return 0;
        }
        if (*cmd_oracle) {
            DegreeWindow w = window_of(or_c);
            ParsedFile pf = parse_file(or_file);
            const auto* x = pf.complex(or_of);
            const auto* y = pf.complex(or_into);
            if (!x || !y)
                throw std::invalid_argument("oracle needs two named complexes");
            AbutmentTable tbl = abutment_oracle(*x, *y, w);
            std::ostringstream os;
            os << "abutment totals pi_d = H Hom(" << x->name() << ", " << y->name()
               << ") for d in [" << tbl.d_min << ", " << tbl.d_max << "]:\n";
            for (const auto& [d, v] : tbl.totals)
                os << "  d=" << d << " -> " << v << "\n";
            emit(or_c, os.str());
            return 0;
        }
        if (*cmd_cat) {
            std::ostringstream os;
            if (cat_action == "list") {
                for (const auto& e : catalog()) {
                    os << e.name << ": rank " << e.rank() << ", degrees (";
                    for (std::size_t i = 0; i < e.degrees.size(); ++i)
                        os << (i ? "," : "") << e.degrees[i];
                    os << "), dim " << e.dimension() << "\n";
                }
            } else {
                if (cat_name.empty() && cat_degrees.empty())
                    throw std::invalid_argument("catalog show needs a name or --degrees");
                LoopSpaceEntry e = !cat_degrees.empty()
                                       ? make_entry(cat_name.empty() ? "user" : cat_name,
                                                    cat_degrees)
                                       : catalog_entry(cat_name);
                LoopCohomology lc = loop_cohomology(e);
                os << "entry: " << e.name << "\nrank: " << e.rank() << "\ndimension: "
                   << e.dimension() << "\n";
                RingPtr ring = classifying_ring(e);
                os << "classifying ring: " << ring->name() << " with generators";
                for (std::size_t i = 0; i < ring->rank(); ++i)
                    os << " |" << ring->generator_name(i) << "|=" << ring->generator_degree(i);
                os << "\nexterior degrees:";
                for (int d : lc.exterior_degrees)
                    os << " " << d;
                os << "\nexterior hilbert:";
                for (long v : lc.hilbert)
                    os << " " << v;
                os << "\npalindromic: " << (lc.palindromic ? "yes" : "NO") << "\n";
            }
            emit(cat_c, os.str());
            return 0;
        }
        if (*cmd_ver) {
            VerifyOptions vo;
            vo.window = window_of(ver_c);
            vo.k_max = ver_c.kmax;
            vo.mutate_koszul_sign = (ver_mutate == "koszul-sign");
            std::vector<std::string> scope = ver_rings.empty() ? default_verify_scope() : ver_rings;
            VerifyReport rep = verify_suite(scope, vo);
            std::ostringstream os;
            os << "verify: window [" << vo.window.t_min << ", " << vo.window.t_max << "], kmax "
               << vo.k_max << (vo.mutate_koszul_sign ? ", FAULT INJECTION: koszul-sign" : "")
               << "\n";
            for (const auto& ck : rep.checks)
                os << (ck.pass ? "PASS" : "FAIL") << " " << ck.name << ": " << ck.detail << "\n";
            for (const auto& sk : rep.skipped)
                os << "SKIP " << sk << "\n";
            os << (rep.all_pass() ? "verify: all checks passed\n" : "verify: FAILURES present\n");
            emit(ver_c, os.str());
            return rep.all_pass() ? 0 : 1;
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
