#include "frobq/cli.hpp"

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "frobq/frobenius.hpp"
#include "frobq/membership.hpp"
#include "frobq/oracle.hpp"
#include "frobq/text.hpp"

namespace frobq::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const char kUsage[] =
    R"(frobq: two-generator Frobenius problems in Z[sqrt(m)]

usage:
  frobq --m M <command> GEN1 GEN2 [TARGET] [options]

commands:
  classify GEN1 GEN2        report the shape tag of the generator pair
  span GEN1 GEN2            decide whether the pair spans 1
  solve GEN1 GEN2 TARGET    canonical solution of the mixed linear system
  member GEN1 GEN2 TARGET   semigroup membership with certificate
  frob GEN1 GEN2            Frobenius set: corner, empty, or not spanning
  verify GEN1 GEN2          check the formulas against the brute-force oracle

elements:
  INT, INTr, INT+INTr, or INT-INTr, where the literal r stands for sqrt(m)
  and a bare r means 1r. Examples: 3, 2r, 1+1r, -3+0r. Generators must have
  both parts nonnegative and not both zero; targets may be negative.

options:
  --m M       radicand: an integer >= 2 that is not a perfect square (required)
  --json      emit one JSON document instead of text
  --pad K     verify: margin added around the corner box (default 8)
  --count K   verify: witnesses probed per frontier family (default 4)
  --csv PATH  verify: also write per-point verdicts as CSV
  -h, --help  show this help

exit codes:
  0 computed, 1 verification failed, 2 usage or precondition error
)";

struct Options {
    std::vector<std::string> positionals;
    std::optional<std::string> m_text;
    std::optional<std::string> pad_text;
    std::optional<std::string> count_text;
    std::optional<std::string> csv_path;
    bool json_mode = false;
    bool help = false;
};

// Tokens starting with "--" are flags; everything else, including
// single-dash tokens such as the element "-3+0r", is positional.
Options parse_args(const std::vector<std::string>& args) {
    Options opt;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& tok = args[i];
        auto value_of = [&](const char* name) -> const std::string& {
            if (i + 1 >= args.size()) {
                throw UsageError(std::string(name) + " needs a value");
            }
            return args[++i];
        };
        if (tok == "--m") {
            opt.m_text = value_of("--m");
        } else if (tok == "--pad") {
            opt.pad_text = value_of("--pad");
        } else if (tok == "--count") {
            opt.count_text = value_of("--count");
        } else if (tok == "--csv") {
            opt.csv_path = value_of("--csv");
        } else if (tok == "--json") {
            opt.json_mode = true;
        } else if (tok == "--help" || tok == "-h") {
            opt.help = true;
        } else if (tok.rfind("--", 0) == 0) {
            throw UsageError("unknown flag " + tok);
        } else {
            opt.positionals.push_back(tok);
        }
    }
    return opt;
}

Int parse_unsigned(const std::string& text, const char* what) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
        throw UsageError(std::string(what) + " must be a nonnegative decimal integer, got \"" +
                         text + "\"");
    }
    return Int(text);
}

long to_long(const Int& v, const char* what) {
    if (!mpz_fits_slong_p(v.get_mpz_t())) {
        throw UsageError(std::string(what) + " is too large");
    }
    return v.get_si();
}

// Integers within the exact double range go out as JSON numbers; anything
// larger goes out as a decimal string so no reader rounds it.
ordered_json json_int(const Int& v) {
    static const Int safe_max = (Int(1) << 53) - 1;
    if (-safe_max <= v && v <= safe_max) {
        return ordered_json(static_cast<std::int64_t>(v.get_si()));
    }
    return ordered_json(v.get_str());
}

ordered_json json_solution(const Solution4& s) {
    ordered_json j;
    j["x"] = json_int(s.x);
    j["y"] = json_int(s.y);
    j["z"] = json_int(s.z);
    j["w"] = json_int(s.w);
    return j;
}

ordered_json json_delta(const Solution4& s) {
    ordered_json j;
    j["dx"] = json_int(s.x);
    j["dy"] = json_int(s.y);
    j["dz"] = json_int(s.z);
    j["dw"] = json_int(s.w);
    return j;
}

std::string frob_kind_name(FrobKind kind) {
    switch (kind) {
        case FrobKind::NotSpanning: return "NotSpanning";
        case FrobKind::EmptyFrob: return "EmptyFrob";
        case FrobKind::Cone: return "Cone";
    }
    return "?";
}

std::string case_name(SystemCase c) {
    return c == SystemCase::RationalGen ? "RationalGen" : "RootGen";
}

std::string tuple_text(const Solution4& s, const char* names) {
    // names is four single characters, e.g. "xyzw".
    const Int* parts[] = {&s.x, &s.y, &s.z, &s.w};
    std::string text;
    for (int i = 0; i < 4; ++i) {
        if (i > 0) {
            text += ' ';
        }
        text += names[i];
        text += '=';
        text += parts[i]->get_str();
    }
    return text;
}

void write_csv(const std::string& path, const RegionReport& region) {
    std::ofstream file(path);
    if (!file) {
        throw UsageError("cannot open \"" + path + "\" for writing");
    }
    file << "A,B,member_formula,member_oracle\n";
    for (const PointVerdict& p : region.points) {
        file << p.target.rat.get_str() << ',' << p.target.irr.get_str() << ','
             << (p.formula_member ? '1' : '0') << ',' << (p.oracle_member ? '1' : '0') << '\n';
    }
    if (!file) {
        throw UsageError("failed while writing \"" + path + "\"");
    }
}

struct Request {
    std::string command;
    RingContext ctx;
    QuadInt gen1, gen2;  // as given on the command line
    GeneratorPair pair;  // possibly reordered by rank
    bool swapped;        // true when pair.alpha1 is gen2
    bool json_mode;
};

void emit(std::ostream& out, const Request& req, ordered_json result,
          const ordered_json* witnesses) {
    ordered_json doc;
    doc["command"] = req.command;
    doc["m"] = json_int(req.ctx.radicand());
    doc["generators"] = {format_element(req.gen1), format_element(req.gen2)};
    doc["result"] = std::move(result);
    if (witnesses != nullptr) {
        doc["witnesses"] = *witnesses;
    }
    out << doc.dump(2) << '\n';
}

void print_header(std::ostream& out, const Request& req) {
    out << "m: " << req.ctx.radicand().get_str() << '\n';
    out << "generators: " << req.gen1 << ", " << req.gen2 << '\n';
}

int cmd_classify(const Request& req, std::ostream& out) {
    if (req.json_mode) {
        ordered_json result;
        result["tag"] = to_string(req.pair.tag);
        emit(out, req, std::move(result), nullptr);
    } else {
        print_header(out, req);
        out << "tag: " << to_string(req.pair.tag) << '\n';
    }
    return 0;
}

int cmd_span(const Request& req, std::ostream& out) {
    const bool spans = spans_one(req.pair);
    if (req.json_mode) {
        ordered_json result;
        result["tag"] = to_string(req.pair.tag);
        result["spans_one"] = spans;
        emit(out, req, std::move(result), nullptr);
    } else {
        print_header(out, req);
        out << "tag: " << to_string(req.pair.tag) << '\n';
        out << "spans_one: " << (spans ? "true" : "false") << '\n';
    }
    return 0;
}

int cmd_frob(const Request& req, std::ostream& out) {
    const FrobResult frob = frobenius_set(req.pair);
    if (req.json_mode) {
        ordered_json result;
        result["tag"] = to_string(req.pair.tag);
        result["kind"] = frob_kind_name(frob.kind);
        if (frob.kind == FrobKind::Cone) {
            result["corner"] = format_element(frob.corner);
        }
        emit(out, req, std::move(result), nullptr);
    } else {
        print_header(out, req);
        out << "tag: " << to_string(req.pair.tag) << '\n';
        out << "kind: " << frob_kind_name(frob.kind) << '\n';
        if (frob.kind == FrobKind::Cone) {
            out << "corner: " << frob.corner << '\n';
        }
    }
    return 0;
}

int cmd_solve(const Request& req, const QuadInt& target, std::ostream& out) {
    const MixedSystem sys = system_for(req.pair, target);
    const CanonicalSolution canon = solve_canonical(sys);
    const Solution4 zero{Int(0), Int(0), Int(0), Int(0)};
    const Solution4 dk = shift_primary(zero, Int(1), sys);
    const Solution4 dl = shift_secondary(zero, Int(1), sys);
    if (req.json_mode) {
        ordered_json result;
        result["tag"] = to_string(req.pair.tag);
        result["case"] = case_name(sys.kase());
        result["target"] = format_element(target);
        result["canonical"] = json_solution(canon.sol);
        result["zmod"] = json_int(canon.zmod);
        result["wmod"] = json_int(canon.wmod);
        result["shift_primary"] = json_delta(dk);
        result["shift_secondary"] = json_delta(dl);
        emit(out, req, std::move(result), nullptr);
    } else {
        print_header(out, req);
        out << "tag: " << to_string(req.pair.tag) << '\n';
        out << "case: " << case_name(sys.kase()) << " (a=" << sys.a().get_str()
            << " b=" << sys.b().get_str() << " c=" << sys.c().get_str() << ")\n";
        out << "target: " << target << '\n';
        out << "canonical: " << tuple_text(canon.sol, "xyzw") << '\n';
        out << "range: 0 <= z < " << canon.zmod.get_str() << ", 0 <= w < "
            << canon.wmod.get_str() << '\n';
        out << "shift_primary: " << tuple_text(dk, "xyzw") << " per unit\n";
        out << "shift_secondary: " << tuple_text(dl, "xyzw") << " per unit\n";
    }
    return 0;
}

int cmd_member(const Request& req, const QuadInt& target, std::ostream& out) {
    MembershipResult res;
    std::string method;
    switch (req.pair.tag) {
        case PairTag::RatMixed:
        case PairTag::RootMixed:
            res = formula_member(req.pair, target);
            method = "formula";
            break;
        case PairTag::RatRat:
        case PairTag::RatRootMult:
            res = formula_member(req.pair, target);
            method = "split";
            break;
        default:
            res = oracle_member(req.pair.alpha1, req.pair.alpha2, target, req.ctx);
            method = "oracle";
            break;
    }
    // Certificates are reported against the generators as given, so undo
    // the rank reordering that classify may have applied.
    std::optional<Certificate> cert = res.certificate;
    if (cert && req.swapped) {
        std::swap(cert->lambda1, cert->lambda2);
    }
    if (req.json_mode) {
        ordered_json result;
        result["tag"] = to_string(req.pair.tag);
        result["target"] = format_element(target);
        result["method"] = method;
        result["member"] = res.member;
        if (cert) {
            ordered_json jcert;
            jcert["lambda1"] = format_element(cert->lambda1);
            jcert["lambda2"] = format_element(cert->lambda2);
            result["certificate"] = std::move(jcert);
        }
        if (res.canonical) {
            ordered_json jcanon = json_solution(res.canonical->sol);
            jcanon["zmod"] = json_int(res.canonical->zmod);
            jcanon["wmod"] = json_int(res.canonical->wmod);
            result["canonical"] = std::move(jcanon);
        }
        emit(out, req, std::move(result), nullptr);
    } else {
        print_header(out, req);
        out << "tag: " << to_string(req.pair.tag) << '\n';
        out << "target: " << target << '\n';
        out << "method: " << method << '\n';
        out << "member: " << (res.member ? "true" : "false") << '\n';
        if (cert) {
            out << "certificate: (" << cert->lambda1 << ")*(" << req.gen1 << ") + ("
                << cert->lambda2 << ")*(" << req.gen2 << ")\n";
        }
        if (res.canonical) {
            out << "canonical: " << tuple_text(res.canonical->sol, "xyzw") << '\n';
        }
    }
    return 0;
}

int cmd_verify(const Request& req, const Int& pad, long count,
               const std::optional<std::string>& csv_path, std::ostream& out) {
    const RegionReport region = verify_region(req.pair, pad);
    const WitnessReport witnesses = falsify_frontier(req.pair, count);
    if (csv_path) {
        write_csv(*csv_path, region);
    }
    const bool pass = region.pass() && witnesses.pass();
    if (req.json_mode) {
        ordered_json result;
        result["tag"] = to_string(req.pair.tag);
        result["corner"] = format_element(region.corner);
        result["pad"] = json_int(pad);
        result["count"] = count;
        ordered_json box;
        box["a_min"] = json_int(region.box.a_min);
        box["a_max"] = json_int(region.box.a_max);
        box["b_min"] = json_int(region.box.b_min);
        box["b_max"] = json_int(region.box.b_max);
        result["box"] = std::move(box);
        result["points"] = region.total;
        result["agreements"] = region.agreements;
        ordered_json mismatches = ordered_json::array();
        for (const PointVerdict& p : region.mismatches) {
            ordered_json row;
            row["A"] = json_int(p.target.rat);
            row["B"] = json_int(p.target.irr);
            row["formula"] = p.formula_member;
            row["oracle"] = p.oracle_member;
            mismatches.push_back(std::move(row));
        }
        result["mismatches"] = std::move(mismatches);
        ordered_json violations = ordered_json::array();
        for (const QuadInt& q : region.cone_violations) {
            ordered_json row;
            row["A"] = json_int(q.rat);
            row["B"] = json_int(q.irr);
            violations.push_back(std::move(row));
        }
        result["cone_violations"] = std::move(violations);
        result["pass"] = pass;
        ordered_json jwit = ordered_json::array();
        for (const WitnessEntry& e : witnesses.entries) {
            ordered_json row;
            row["target"] = format_element(e.target);
            row["skipped"] = e.skipped;
            row["oracle_member"] = e.skipped ? ordered_json() : ordered_json(e.oracle_member);
            jwit.push_back(std::move(row));
        }
        emit(out, req, std::move(result), &jwit);
    } else {
        print_header(out, req);
        out << "tag: " << to_string(req.pair.tag) << '\n';
        out << "corner: " << region.corner << '\n';
        out << "box: A in [" << region.box.a_min.get_str() << ", "
            << region.box.a_max.get_str() << "], B in [" << region.box.b_min.get_str()
            << ", " << region.box.b_max.get_str() << "]\n";
        out << "points: " << region.total << '\n';
        out << "agreements: " << region.agreements << '\n';
        out << "mismatches: " << region.mismatches.size() << '\n';
        for (const PointVerdict& p : region.mismatches) {
            out << "mismatch: A=" << p.target.rat.get_str() << " B=" << p.target.irr.get_str()
                << " formula=" << p.formula_member << " oracle=" << p.oracle_member << '\n';
        }
        out << "cone_violations: " << region.cone_violations.size() << '\n';
        for (const QuadInt& q : region.cone_violations) {
            out << "cone_violation: A=" << q.rat.get_str() << " B=" << q.irr.get_str() << '\n';
        }
        out << "witnesses: " << witnesses.entries.size() << " (skipped "
            << witnesses.skipped() << ", failed " << witnesses.failures() << ")\n";
        for (const WitnessEntry& e : witnesses.entries) {
            if (e.failed()) {
                out << "witness_failure: " << e.target << " is representable\n";
            }
        }
        out << "verdict: " << (pass ? "PASS" : "FAIL") << '\n';
    }
    return pass ? 0 : 1;
}

int dispatch(const Options& opt, std::ostream& out) {
    if (opt.positionals.empty()) {
        throw UsageError("missing command");
    }
    const std::string& command = opt.positionals[0];
    const bool known = command == "classify" || command == "span" || command == "solve" ||
                       command == "member" || command == "frob" || command == "verify";
    if (!known) {
        throw UsageError("unknown command \"" + command + "\"");
    }
    const bool wants_target = command == "solve" || command == "member";
    const std::size_t expected = wants_target ? 4 : 3;
    if (opt.positionals.size() != expected) {
        throw UsageError(command + " takes two generators" +
                         (wants_target ? " and a target" : "") + "; got " +
                         std::to_string(opt.positionals.size() - 1) + " argument(s)");
    }
    if (command != "verify" && (opt.pad_text || opt.count_text || opt.csv_path)) {
        throw UsageError("--pad, --count and --csv apply only to verify");
    }
    if (!opt.m_text) {
        throw UsageError("--m is required");
    }

    const RingContext ctx(parse_unsigned(*opt.m_text, "--m"));
    const QuadInt gen1 = parse_element(opt.positionals[1]);
    const QuadInt gen2 = parse_element(opt.positionals[2]);
    const GeneratorPair pair = classify(gen1, gen2, ctx);
    Request req{command, ctx, gen1, gen2, pair, !(pair.alpha1 == gen1), opt.json_mode};

    if (command == "classify") {
        return cmd_classify(req, out);
    }
    if (command == "span") {
        return cmd_span(req, out);
    }
    if (command == "frob") {
        return cmd_frob(req, out);
    }
    if (command == "solve" || command == "member") {
        const QuadInt target = parse_element(opt.positionals[3]);
        return command == "solve" ? cmd_solve(req, target, out) : cmd_member(req, target, out);
    }
    const Int pad = opt.pad_text ? parse_unsigned(*opt.pad_text, "--pad") : Int(8);
    const long count = opt.count_text ? to_long(parse_unsigned(*opt.count_text, "--count"), "--count") : 4;
    return cmd_verify(req, pad, count, opt.csv_path, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        const Options opt = parse_args(args);
        if (opt.help) {
            out << kUsage;
            return 0;
        }
        return dispatch(opt, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        err << "run \"frobq --help\" for usage\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace frobq::cli
