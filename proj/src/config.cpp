#include "liemult/config.hpp"

#include <fstream>
#include <sstream>

#include "liemult/parse.hpp"

namespace liemult {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos)
        return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok)
        out.push_back(tok);
    return out;
}

int parse_positive_int(const std::string& s, int line_no, const char* what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size() || v < 1)
            throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw parse_error("line " + std::to_string(line_no) + ": bad " +
                          std::string(what) + " '" + s + "'");
    }
}

} // namespace

std::string InstanceConfig::to_text() const {
    std::ostringstream out;
    if (!name.empty())
        out << "name " << name << "\n";
    out << "field " << field_text << "\n";
    out << "alphabet";
    for (const auto& g : alphabet_names)
        out << " " << g;
    out << "\n";
    out << "quotient " << quotient_kind_text << "\n";
    out << "basis";
    for (const auto& b : basis_names)
        out << " " << b;
    out << "\n";
    for (const auto& [i, j, rhs] : brackets)
        out << "bracket " << i << " " << j << " = " << rhs << "\n";
    for (const auto& [g, rhs] : projections)
        out << "project " << g << " -> " << rhs << "\n";
    if (!alpha_text.empty())
        out << "alpha " << alpha_text << "\n";
    if (!slot_names.empty()) {
        out << "slots";
        for (const auto& s : slot_names)
            out << " " << s;
        out << "\n";
    }
    for (const auto& f : family)
        out << "family " << f.element << " | " << f.lift << "\n";
    out << "max_degree " << max_degree << "\n";
    if (max_family != 0)
        out << "max_family " << max_family << "\n";
    return out.str();
}

InstanceConfig parse_config_text(const std::string& text) {
    InstanceConfig cfg;
    cfg.max_degree = kDefaultMaxDegree;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    int declared_n = 0;
    bool saw_field = false, saw_alphabet = false, saw_quotient = false,
         saw_basis = false;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        std::size_t sp = line.find_first_of(" \t");
        std::string key = sp == std::string::npos ? line : line.substr(0, sp);
        std::string rest = sp == std::string::npos ? "" : trim(line.substr(sp));
        auto need_rest = [&]() {
            if (rest.empty())
                throw parse_error("line " + std::to_string(line_no) +
                                  ": directive '" + key + "' needs a value");
        };
        if (key == "name") {
            need_rest();
            cfg.name = rest;
        } else if (key == "field") {
            need_rest();
            cfg.field_text = rest;
            saw_field = true;
        } else if (key == "alphabet") {
            need_rest();
            cfg.alphabet_names = split_ws(rest);
            saw_alphabet = true;
        } else if (key == "quotient") {
            need_rest();
            cfg.quotient_kind_text = rest;
            saw_quotient = true;
        } else if (key == "basis") {
            need_rest();
            cfg.basis_names = split_ws(rest);
            saw_basis = true;
        } else if (key == "bracket") {
            auto eq = rest.find('=');
            if (eq == std::string::npos)
                throw parse_error("line " + std::to_string(line_no) +
                                  ": bracket line needs '='");
            auto pair = split_ws(rest.substr(0, eq));
            std::string rhs = trim(rest.substr(eq + 1));
            if (pair.size() != 2 || rhs.empty())
                throw parse_error("line " + std::to_string(line_no) +
                                  ": expected 'bracket <ei> <ej> = <expr>'");
            cfg.brackets.emplace_back(pair[0], pair[1], rhs);
        } else if (key == "project") {
            auto arrow = rest.find("->");
            if (arrow == std::string::npos)
                throw parse_error("line " + std::to_string(line_no) +
                                  ": projection line needs '->'");
            std::string gen = trim(rest.substr(0, arrow));
            std::string rhs = trim(rest.substr(arrow + 2));
            if (gen.empty() || rhs.empty())
                throw parse_error("line " + std::to_string(line_no) +
                                  ": expected 'project <gen> -> <expr>'");
            cfg.projections.emplace_back(gen, rhs);
        } else if (key == "alpha") {
            need_rest();
            cfg.alpha_text = rest;
        } else if (key == "slots") {
            need_rest();
            cfg.slot_names = split_ws(rest);
        } else if (key == "n") {
            need_rest();
            declared_n = parse_positive_int(rest, line_no, "n");
        } else if (key == "family") {
            auto bar = rest.find('|');
            if (bar == std::string::npos)
                throw parse_error("line " + std::to_string(line_no) +
                                  ": family line needs '<element> | <lift>'");
            FamilyEntryText f{trim(rest.substr(0, bar)), trim(rest.substr(bar + 1))};
            if (f.element.empty() || f.lift.empty())
                throw parse_error("line " + std::to_string(line_no) +
                                  ": family element and lift must be nonempty");
            cfg.family.push_back(std::move(f));
        } else if (key == "max_degree") {
            need_rest();
            cfg.max_degree = parse_positive_int(rest, line_no, "max_degree");
        } else if (key == "max_family") {
            need_rest();
            cfg.max_family = parse_positive_int(rest, line_no, "max_family");
        } else {
            throw parse_error("line " + std::to_string(line_no) +
                              ": unknown directive '" + key + "'");
        }
    }
    if (!saw_field)
        throw parse_error("missing 'field' directive");
    if (!saw_alphabet)
        throw parse_error("missing 'alphabet' directive");
    if (!saw_quotient)
        throw parse_error("missing 'quotient' directive");
    if (!saw_basis)
        throw parse_error("missing 'basis' directive");
    if (declared_n != 0 &&
        declared_n != static_cast<int>(cfg.slot_names.size()))
        throw parse_error("declared n = " + std::to_string(declared_n) +
                          " does not match " +
                          std::to_string(cfg.slot_names.size()) +
                          " slot generators");
    return cfg;
}

InstanceConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        InstanceConfig cfg = parse_config_text(buf.str());
        if (cfg.name.empty()) {
            // default the name to the file stem
            std::string stem = path;
            if (auto slash = stem.find_last_of('/'); slash != std::string::npos)
                stem = stem.substr(slash + 1);
            if (auto dot = stem.find_last_of('.'); dot != std::string::npos)
                stem = stem.substr(0, dot);
            cfg.name = stem;
        }
        return cfg;
    } catch (const parse_error& e) {
        throw parse_error(path + ": " + e.what());
    }
}

Instance build_instance(const InstanceConfig& config) {
    Instance inst;
    inst.config = config;
    FieldSpec fs = FieldSpec::parse(config.field_text);
    inst.alphabet = std::make_shared<const Alphabet>(config.alphabet_names);

    QuotientKind kind;
    if (config.quotient_kind_text == "structure_constants")
        kind = QuotientKind::StructureConstants;
    else if (config.quotient_kind_text == "free_abelian")
        kind = QuotientKind::FreeAbelian;
    else
        throw parse_error("unknown quotient kind '" + config.quotient_kind_text +
                          "' (expected structure_constants or free_abelian)");

    auto pres = std::make_shared<QuotientPresentation>(
        kind, config.basis_names, fs, inst.alphabet, config.max_degree);
    PresentationPtr cpres = pres;

    auto basis_idx = [&](const std::string& nm) {
        auto k = cpres->basis_index(nm);
        if (!k)
            throw parse_error("unknown basis element '" + nm + "'");
        return *k;
    };
    for (const auto& [i, j, rhs] : config.brackets)
        pres->set_bracket(basis_idx(i), basis_idx(j), parse_lincomb(rhs, cpres));
    pres->validate();

    std::vector<bool> projected(inst.alphabet->size(), false);
    for (const auto& [gen, rhs] : config.projections) {
        auto g = inst.alphabet->index_of(gen);
        if (!g)
            throw parse_error("projection of unknown generator '" + gen + "'");
        if (projected[*g])
            throw parse_error("duplicate projection for generator '" + gen + "'");
        projected[*g] = true;
        pres->set_projection(*g, parse_lincomb(rhs, cpres));
    }
    for (std::uint32_t g = 0; g < inst.alphabet->size(); ++g)
        if (!projected[g])
            throw parse_error("missing projection for generator '" +
                              inst.alphabet->name(g) + "'");

    inst.presentation = cpres;

    if (config.alpha_text.empty())
        throw parse_error("missing 'alpha' directive");
    if (config.slot_names.size() < 2)
        throw parse_error("need at least two slot generators");

    NCPoly alpha = parse_lie_element(config.alpha_text, inst.alphabet, fs);
    try {
        if (!is_lie_element(alpha))
            throw domain_error("alpha is not a Lie element: " + config.alpha_text);
    } catch (const criterion_unavailable&) {
        // small characteristic: the Lie grammar already guarantees it
    }

    std::vector<std::uint32_t> slots;
    for (const auto& s : config.slot_names) {
        auto idx = inst.alphabet->index_of(s);
        if (!idx)
            throw parse_error("unknown slot generator '" + s + "'");
        slots.push_back(*idx);
    }

    std::vector<WitnessFamilyEntry> family;
    for (const auto& f : config.family) {
        UQElement elem = parse_uq_element(f.element, cpres);
        NCPoly lift = parse_ncpoly(f.lift, inst.alphabet, fs);
        family.push_back({std::move(elem), std::move(lift)});
    }

    inst.witness = WitnessSpec{cpres, std::move(alpha), std::move(slots),
                               std::move(family)};
    inst.witness.validate();
    return inst;
}

} // namespace liemult
