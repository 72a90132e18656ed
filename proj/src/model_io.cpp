#include "wdc2d/model_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace wdc {

namespace {

double parse_number(const std::string& tok)
{
    if (tok.find('/') != std::string::npos) return to_double(parse_rational(tok));
    std::size_t used = 0;
    const double v = std::stod(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("bad number '" + tok + "'");
    return v;
}

std::vector<std::string> tokenize(const std::string& line)
{
    std::istringstream is(line);
    std::vector<std::string> toks;
    std::string t;
    while (is >> t) {
        if (t[0] == '#') break;
        toks.push_back(t);
    }
    return toks;
}

DCFun1 parse_profile_block(std::istream& in)
{
    std::vector<Rational> knots, values;
    std::string line;
    while (std::getline(in, line)) {
        const auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks[0] == "end") {
            if (knots.size() < 2)
                throw std::invalid_argument("model: profile needs at least two knots");
            return DCFun1::from_pl(knots, values);
        }
        if (toks.size() != 2)
            throw std::invalid_argument("model: profile rows are '<u> <v>' rationals");
        knots.push_back(parse_rational(toks[0]));
        values.push_back(parse_rational(toks[1]));
    }
    throw std::invalid_argument("model: profile block not closed with 'end'");
}

struct SectorBlock {
    double theta = 0.0;
    double radius = 0.0;
    Rational omega;
    bool has_omega = false;
    std::vector<std::pair<std::string, DCFun1>> profiles;
};

SectorBlock parse_sector_block(std::istream& in)
{
    SectorBlock b;
    std::string line;
    while (std::getline(in, line)) {
        const auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks[0] == "end") return b;
        if (toks[0] == "theta_deg" && toks.size() == 2) {
            b.theta = parse_number(toks[1]) * M_PI / 180.0;
        } else if (toks[0] == "radius" && toks.size() == 2) {
            b.radius = parse_number(toks[1]);
        } else if (toks[0] == "omega" && toks.size() == 2) {
            b.omega = parse_rational(toks[1]);
            b.has_omega = true;
        } else if (toks[0] == "begin" && toks.size() == 3 && toks[1] == "profile") {
            b.profiles.emplace_back(toks[2], parse_profile_block(in));
        } else {
            throw std::invalid_argument("model: unexpected sector line '" + line + "'");
        }
    }
    throw std::invalid_argument("model: sector block not closed with 'end'");
}

} // namespace

ModelFile load_model(std::istream& in)
{
    ModelFile mf;
    bool kind_seen = false;
    std::string line;
    std::vector<SectorBlock> sector_blocks;
    std::string case_name;

    while (std::getline(in, line)) {
        const auto toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string& key = toks[0];

        if (key == "kind") {
            if (toks.size() != 2) throw std::invalid_argument("model: 'kind set|prz'");
            if (toks[1] == "set") mf.kind = ModelFile::Kind::set;
            else if (toks[1] == "prz") mf.kind = ModelFile::Kind::prz;
            else throw std::invalid_argument("model: unknown kind '" + toks[1] + "'");
            kind_seen = true;
        } else if (key == "point" && toks.size() == 3) {
            mf.set.add_point({parse_number(toks[1]), parse_number(toks[2])});
        } else if (key == "segment" && toks.size() == 5) {
            mf.set.add_segment({parse_number(toks[1]), parse_number(toks[2])},
                               {parse_number(toks[3]), parse_number(toks[4])});
        } else if (key == "center" && toks.size() == 3) {
            mf.local.center = {parse_number(toks[1]), parse_number(toks[2])};
        } else if (key == "rho" && toks.size() == 2) {
            mf.local.rho = parse_number(toks[1]);
        } else if (key == "shrink" && toks.size() == 2) {
            mf.shrink = parse_number(toks[1]);
        } else if (key == "case" && toks.size() == 2) {
            case_name = toks[1];
        } else if (key == "begin" && toks.size() == 2 && toks[1] == "sector") {
            sector_blocks.push_back(parse_sector_block(in));
        } else {
            throw std::invalid_argument("model: unexpected line '" + line + "'");
        }
    }
    if (!kind_seen) throw std::invalid_argument("model: missing 'kind'");

    if (mf.kind == ModelFile::Kind::set) {
        if (mf.set.empty()) throw std::invalid_argument("model: empty set");
        return mf;
    }

    if (case_name == "isolated") {
        mf.local.kind = LocalModel::Case::isolated;
    } else if (case_name == "degenerate") {
        mf.local.kind = LocalModel::Case::degenerate;
        if (sector_blocks.size() != 1)
            throw std::invalid_argument("model: degenerate case needs exactly one sector block");
        const auto& b = sector_blocks[0];
        DegenerateClosedSector s;
        s.theta = b.theta;
        s.radius = b.radius > 0.0 ? b.radius : mf.local.rho;
        if (!b.has_omega) throw std::invalid_argument("model: sector needs omega");
        s.omega = b.omega;
        for (const auto& [name, prof] : b.profiles) {
            if (name == "f") s.upper = prof;
            else if (name == "g") s.lower = prof;
            else throw std::invalid_argument("model: degenerate profiles are named f and g");
        }
        if (s.upper.g.knots().empty())
            throw std::invalid_argument("model: degenerate case needs profile f");
        if (s.lower.g.knots().empty()) s.lower = s.upper;   // thin sliver: g = f
        mf.local.closed_sector = s;
    } else if (case_name == "complement") {
        mf.local.kind = LocalModel::Case::complement;
        if (sector_blocks.empty())
            throw std::invalid_argument("model: complement case needs sector blocks");
        for (const auto& b : sector_blocks) {
            BasicOpenSector s;
            s.theta = b.theta;
            s.radius = b.radius > 0.0 ? b.radius : mf.local.rho;
            if (!b.has_omega) throw std::invalid_argument("model: sector needs omega");
            s.omega = b.omega;
            if (b.profiles.size() != 1 || b.profiles[0].first != "f")
                throw std::invalid_argument("model: open sectors carry a single profile f");
            s.profile = b.profiles[0].second;
            mf.local.sectors.push_back(std::move(s));
        }
    } else {
        throw std::invalid_argument("model: case must be isolated|degenerate|complement");
    }

    const auto violations = validate_model(mf.local);
    if (!violations.empty())
        throw std::invalid_argument("model: " + violations.front());
    return mf;
}

ModelFile load_model_path(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open model file '" + path + "'");
    return load_model(in);
}

CompactSetModel realize_model(const ModelFile& mf)
{
    if (mf.kind == ModelFile::Kind::set) return mf.set;
    return build_local_set(mf.local, mf.shrink);
}

} // namespace wdc
