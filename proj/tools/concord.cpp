#include "concord/errors.hpp"
#include "concord/fox.hpp"
#include "concord/json_io.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace {

using namespace concord;

void emit(const nlohmann::ordered_json& doc) { std::cout << doc.dump(2) << "\n"; }

int infer_rank(const Word& probe) { return probe.rank(); }

// Word text arrives without a declared rank; use the smallest even rank
// covering every generator mentioned.
Word parse_word_loose(const std::string& text, int min_rank = 2) {
    int max_gen = 0;
    size_t i = 0;
    while (i < text.size()) {
        if (text[i] == 'x') {
            size_t j = i + 1;
            int g = 0;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
                g = g * 10 + (text[j] - '0');
                ++j;
            }
            max_gen = std::max(max_gen, g);
            i = j;
        } else {
            ++i;
        }
    }
    int rank = std::max(min_rank, max_gen + (max_gen % 2));
    return Word::parse(rank, text);
}

GroupHom parse_hom_spec(const std::string& spec, int rank) {
    if (spec == "abelianization")
        return GroupHom::abelianization(rank);
    if (spec == "trivial")
        return GroupHom::trivial(rank, RingBase::free_abelian(rank));
    if (spec.rfind("quotient:", 0) == 0) {
        int level = 0;
        try {
            level = std::stoi(spec.substr(9));
        } catch (...) {
            throw validation_error("hom: malformed quotient level in '" + spec + "'");
        }
        return GroupHom::to_quotient(rank, level);
    }
    if (spec.rfind("exponents:", 0) == 0) {
        // exponents:<m>:<v_1>|...|<v_rank>, each v a comma-separated integer list
        std::string rest = spec.substr(10);
        size_t colon = rest.find(':');
        if (colon == std::string::npos)
            throw validation_error("hom: expected exponents:<m>:<images>");
        int m = 0;
        try {
            m = std::stoi(rest.substr(0, colon));
        } catch (...) {
            throw validation_error("hom: malformed target rank in '" + spec + "'");
        }
        std::vector<std::vector<std::int64_t>> images;
        std::string body = rest.substr(colon + 1);
        size_t pos = 0;
        while (pos <= body.size()) {
            size_t bar = body.find('|', pos);
            std::string part =
                body.substr(pos, bar == std::string::npos ? std::string::npos : bar - pos);
            std::vector<std::int64_t> v;
            if (!part.empty()) {
                size_t p = 0;
                while (p <= part.size()) {
                    size_t comma = part.find(',', p);
                    std::string tok = part.substr(
                        p, comma == std::string::npos ? std::string::npos : comma - p);
                    try {
                        v.push_back(std::stoll(tok));
                    } catch (...) {
                        throw validation_error("hom: '" + tok + "' is not an integer");
                    }
                    if (comma == std::string::npos)
                        break;
                    p = comma + 1;
                }
            }
            images.push_back(std::move(v));
            if (bar == std::string::npos)
                break;
            pos = bar + 1;
        }
        return GroupHom::from_exponent_images(rank, m, std::move(images));
    }
    throw validation_error(
        "hom: expected 'abelianization', 'trivial', 'quotient:<level>' or "
        "'exponents:<m>:<images>', got '" +
        spec + "'");
}

std::vector<int> parse_eps(const std::string& bits, const char* name) {
    std::vector<int> out;
    for (char c : bits) {
        if (c != '0' && c != '1')
            throw validation_error(std::string(name) + ": expected a string of 0/1 digits");
        out.push_back(c - '0');
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact knot-concordance toolkit: Fox calculus, commutator tuple "
                 "families, Seifert invariants, certified signature profiles and "
                 "infection-family planning"};
    app.require_subcommand(1);

    std::string matrix_path, plan_path, word_text, hom_spec, tolerance_text = "1e-9";
    std::string eps_i_text, eps_j_text, cm_text;
    int index = 1, genus = 2, level = 1, axes = 1, count = 1, step_i = 1, step_j = 0;
    long limit = -1;
    bool classical = false, emit_csv = false;

    auto* alexander_cmd = app.add_subcommand("alexander", "Alexander polynomial of a Seifert matrix");
    alexander_cmd->add_option("--matrix", matrix_path, "Seifert matrix JSON file")->required();
    alexander_cmd->callback([&] { emit(poly_to_json(alexander(load_matrix(matrix_path)))); });

    auto* arf_cmd = app.add_subcommand("arf", "Arf invariant of a Seifert matrix");
    arf_cmd->add_option("--matrix", matrix_path, "Seifert matrix JSON file")->required();
    arf_cmd->callback([&] {
        nlohmann::ordered_json out;
        out["arf"] = arf(load_matrix(matrix_path));
        emit(out);
    });

    auto* signature_cmd =
        app.add_subcommand("signature", "certified signature profile over the unit circle");
    signature_cmd->add_option("--matrix", matrix_path, "Seifert matrix JSON file")->required();
    signature_cmd->add_flag("--emit-csv", emit_csv,
                            "write the arc table as CSV instead of JSON");
    signature_cmd->callback([&] {
        SignatureProfile p = signature_profile(load_matrix(matrix_path));
        if (emit_csv)
            std::cout << profile_to_csv(p);
        else
            emit(profile_to_json(p));
    });

    auto* rho_cmd = app.add_subcommand("rho", "normalized signature integral over the circle");
    rho_cmd->add_option("--matrix", matrix_path, "Seifert matrix JSON file")->required();
    rho_cmd->add_option("--tolerance", tolerance_text,
                        "enclosure width for irrational jumps (default 1e-9)");
    rho_cmd->callback([&] {
        emit(rho_to_json(rho_z(load_matrix(matrix_path), parse_rational(tolerance_text))));
    });

    auto* fox_cmd = app.add_subcommand("fox", "free differential of a word");
    fox_cmd->add_option("--word", word_text, "word, e.g. 'x1 x2^-1 x1^3'")->required();
    fox_cmd->add_option("--index", index, "generator index to differentiate by")->required();
    fox_cmd->add_flag("--classical", classical, "use the classical left convention");
    fox_cmd->callback([&] {
        Word w = parse_word_loose(word_text);
        nlohmann::ordered_json out;
        out["element"] = (classical ? fox_classical(w, index) : fox(w, index)).str();
        emit(out);
    });

    auto* tuples_cmd = app.add_subcommand("tuples", "enumerate the recursive tuple family");
    tuples_cmd->add_option("--genus", genus, "genus g (rank 2g)")->required();
    tuples_cmd->add_option("--level", level, "family level n")->required();
    tuples_cmd->add_option("--limit", limit, "stop after this many tuples");
    tuples_cmd->callback([&] {
        TupleFamilyCursor cursor = generate_P(genus, level);
        nlohmann::ordered_json tuples = nlohmann::ordered_json::array();
        long emitted = 0;
        while (limit < 0 || emitted < limit) {
            auto t = cursor.next();
            if (!t)
                break;
            tuples.push_back(tuple_to_json(*t));
            ++emitted;
        }
        nlohmann::ordered_json out;
        out["genus"] = genus;
        out["level"] = level;
        out["family_size"] = integer_str(family_size(genus, level));
        out["emitted"] = emitted;
        out["tuples"] = std::move(tuples);
        emit(out);
    });

    auto* special_cmd =
        app.add_subcommand("special", "constructive special-tuple search with certificate");
    special_cmd->add_option("--genus", genus, "genus g (rank 2g)")->required();
    special_cmd->add_option("--level", level, "family level n")->required();
    special_cmd
        ->add_option("--hom", hom_spec,
                     "'abelianization', 'trivial', 'quotient:<level>' or "
                     "'exponents:<m>:<v1>|...|<v2g>'")
        ->required();
    special_cmd->callback([&] {
        GroupHom r = parse_hom_spec(hom_spec, 2 * genus);
        emit(special_to_json(find_special_tuple(r, level)));
    });

    auto* plan_cmd = app.add_subcommand("plan", "greedy-minimal infection schedule");
    plan_cmd->add_option("--matrix", matrix_path, "base Seifert matrix JSON file")->required();
    plan_cmd->add_option("--level", level, "solvability level n")->required();
    plan_cmd->add_option("--axes", axes, "number of infection axes m")->required();
    plan_cmd->add_option("--cm", cm_text, "positive rational bound c")->required();
    plan_cmd->add_option("--count", count, "number of schedule steps")->required();
    plan_cmd->callback([&] {
        emit(plan_to_json(
            plan_family(load_matrix(matrix_path), level, axes, parse_rational(cm_text), count)));
    });

    auto* verify_cmd = app.add_subcommand("verify", "recompute and check a plan");
    verify_cmd->add_option("--plan", plan_path, "plan JSON file")->required();
    verify_cmd->callback([&] { emit(report_to_json(verify_plan(load_plan(plan_path)))); });

    auto* gap_cmd = app.add_subcommand("gap", "lower bound on a rho difference");
    gap_cmd->add_option("--plan", plan_path, "plan JSON file")->required();
    gap_cmd->add_option("--i", step_i, "larger step index")->required();
    gap_cmd->add_option("--j", step_j, "smaller step index (0 for none)")->required();
    gap_cmd->add_option("--eps-i", eps_i_text, "0/1 string, one digit per axis")->required();
    gap_cmd->add_option("--eps-j", eps_j_text, "0/1 string, one digit per axis");
    gap_cmd->callback([&] {
        FamilyPlan plan = load_plan(plan_path);
        std::vector<int> ei = parse_eps(eps_i_text, "eps-i");
        std::vector<int> ej = parse_eps(eps_j_text, "eps-j");
        emit(gap_to_json(gap_lower_bound(plan, step_i, step_j, ei, ej)));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    } catch (const concord::validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const concord::budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
