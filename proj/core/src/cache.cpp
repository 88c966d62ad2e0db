#include "cclab/cache.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace cclab {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

namespace {

constexpr const char* kMagic = "cclab-table/";

ojson encode_value(const Cyc& x) {
    ojson terms = ojson::array();
    for (int i = 0; i < x.degree(); ++i) {
        const Rational& c = x.coeff(i);
        if (c.is_zero()) continue;
        terms.push_back(ojson::array({i, std::to_string(c.num()), std::to_string(c.den())}));
    }
    return ojson::array({x.order(), terms});
}

Cyc decode_value(const ojson& v) {
    int e = v.at(0).get<int>();
    Cyc x(e);
    for (const auto& t : v.at(1)) {
        int i = t.at(0).get<int>();
        if (i < 0 || i >= x.degree()) throw CacheError(CacheError::Kind::Corrupt, "coefficient index out of range");
        x.coeff_mut(i) = Rational(std::stoll(t.at(1).get<std::string>()), std::stoll(t.at(2).get<std::string>()));
    }
    return x;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string safe_name(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (std::isalnum(static_cast<unsigned char>(c)))
            out += c;
        else if (c == '+')
            out += 'p';
        else if (c == '-')
            out += 'm';
        else if (c == ',')
            out += '_';
    }
    return out;
}

}  // namespace

uint64_t fnv1a64(const std::string& bytes) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex64(uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::string serialize_table(const CharacterTable& t) {
    const auto& G = t.group();
    if (!G.has_spec()) throw std::invalid_argument("only catalog groups can be cached");
    const auto& cls = *t.classes;
    ojson body;
    body["schema"] = kCacheSchemaVersion;
    body["engine"] = kTableEngineVersion;
    body["spec"] = G.spec().str();
    body["elements"] = G.order();
    body["exponent"] = t.exponent;
    ojson classes = ojson::array();
    for (int c = 0; c < cls.count(); ++c)
        classes.push_back(ojson::array({cls.rep(c), cls.size(c), cls.element_order(c)}));
    body["classes"] = classes;
    ojson chars = ojson::array();
    for (const auto& chi : t.irr) {
        ojson row = ojson::array();
        for (const auto& v : chi.values()) row.push_back(encode_value(v));
        chars.push_back(row);
    }
    body["characters"] = chars;
    std::string text = body.dump();
    return std::string(kMagic) + std::to_string(kCacheSchemaVersion) + " " + hex64(fnv1a64(text)) + "\n" + text;
}

std::string serialized_hash(const std::string& text) {
    auto nl = text.find('\n');
    auto sp = text.find(' ');
    if (nl == std::string::npos || sp == std::string::npos || sp > nl)
        throw CacheError(CacheError::Kind::Corrupt, "missing cache header");
    return text.substr(sp + 1, nl - sp - 1);
}

TablePtr restore_table(const std::string& text, const ClassesPtr& classes) {
    using K = CacheError::Kind;
    const std::string magic = kMagic;
    if (text.compare(0, magic.size(), magic) != 0) throw CacheError(K::Corrupt, "not a cclab table file");
    auto nl = text.find('\n');
    auto sp = text.find(' ');
    if (nl == std::string::npos || sp == std::string::npos || sp > nl) throw CacheError(K::Corrupt, "missing cache header");
    std::string version = text.substr(magic.size(), sp - magic.size());
    if (version != std::to_string(kCacheSchemaVersion))
        throw CacheError(K::Schema, "cache schema " + version + " != " + std::to_string(kCacheSchemaVersion));
    std::string body_text = text.substr(nl + 1);
    if (serialized_hash(text) != hex64(fnv1a64(body_text))) throw CacheError(K::Tampered, "content hash mismatch");

    ojson body;
    try {
        body = ojson::parse(body_text);
    } catch (const std::exception& e) {
        throw CacheError(K::Corrupt, std::string("unreadable cache body: ") + e.what());
    }
    try {
        if (body.at("schema").get<int>() != kCacheSchemaVersion) throw CacheError(K::Schema, "schema field mismatch");
        if (body.at("engine").get<std::string>() != kTableEngineVersion)
            throw CacheError(K::Schema, "table engine version changed");
        const auto& G = *classes->group();
        if (!G.has_spec() || body.at("spec").get<std::string>() != G.spec().str())
            throw CacheError(K::Mismatch, "cached spec does not match the group");
        if (body.at("elements").get<int64_t>() != G.order()) throw CacheError(K::Mismatch, "element count differs");
        const auto& cj = body.at("classes");
        if (static_cast<int>(cj.size()) != classes->count()) throw CacheError(K::Mismatch, "class count differs");
        for (int c = 0; c < classes->count(); ++c) {
            if (cj[c].at(0).get<int>() != classes->rep(c) || cj[c].at(1).get<int64_t>() != classes->size(c) ||
                cj[c].at(2).get<int>() != classes->element_order(c))
                throw CacheError(K::Mismatch, "class data differs at class " + std::to_string(c));
        }
        auto t = std::make_shared<CharacterTable>();
        t->classes = classes;
        t->exponent = body.at("exponent").get<int>();
        for (const auto& row : body.at("characters")) {
            if (static_cast<int>(row.size()) != classes->count()) throw CacheError(K::Corrupt, "character row length");
            std::vector<Cyc> vals;
            vals.reserve(row.size());
            for (const auto& v : row) vals.push_back(decode_value(v));
            ClassFunction chi(classes, std::move(vals));
            const Cyc& d = chi.degree();
            if (!d.is_rational() || d.rational_value().den() != 1) throw CacheError(K::Corrupt, "non-integral degree");
            t->degrees.push_back(d.rational_value().num());
            t->irr.push_back(std::move(chi));
        }
        for (int c = 0; c < classes->count(); ++c) t->centralizers.push_back(classes->centralizer_order(c));
        TableCheck chk = verify_table(*t);
        if (!chk.ok()) throw CacheError(K::Corrupt, "cached table fails re-verification: " + chk.detail);
        return t;
    } catch (const CacheError&) {
        throw;
    } catch (const std::exception& e) {
        throw CacheError(K::Corrupt, std::string("malformed cache body: ") + e.what());
    }
}

const char* cache_status_name(CacheEvent::Status s) {
    switch (s) {
        case CacheEvent::Status::Disabled: return "disabled";
        case CacheEvent::Status::Hit: return "hit";
        case CacheEvent::Status::Miss: return "miss";
        case CacheEvent::Status::Rebuilt: return "rebuilt";
    }
    return "?";
}

TableCache::TableCache(std::string dir) : dir_(std::move(dir)) {}

TableCache TableCache::from_env() {
    const char* d = std::getenv("CCLAB_CACHE_DIR");
    return TableCache(d ? d : "");
}

std::string TableCache::path_for(const GroupSpec& spec) const {
    std::string key = spec.str() + "|" + std::to_string(kCacheSchemaVersion) + "|" + kTableEngineVersion;
    return (fs::path(dir_) / (safe_name(spec.str()) + "-" + hex64(fnv1a64(key)) + ".table")).string();
}

TablePtr TableCache::table(const GroupSpec& spec, size_t enumeration_budget, CacheEvent* event) const {
    return table(compute_classes(enumerate(spec, enumeration_budget)), event);
}

TablePtr TableCache::table(const ClassesPtr& classes, CacheEvent* event) const {
    CacheEvent local;
    CacheEvent& ev = event ? *event : local;
    if (!enabled() || !classes->group()->has_spec()) {
        ev.status = CacheEvent::Status::Disabled;
        return build_table(classes);
    }
    const auto& spec = classes->group()->spec();
    fs::path p = path_for(spec);
    ev.path = p.string();
    ev.status = CacheEvent::Status::Miss;
    std::error_code ec;
    if (fs::exists(p, ec)) {
        try {
            auto t = restore_table(read_file(p), classes);
            ev.status = CacheEvent::Status::Hit;
            return t;
        } catch (const CacheError& e) {
            ev.status = CacheEvent::Status::Rebuilt;
            ev.warning = "cache entry " + p.string() + " rejected (" + e.what() + "); rebuilding";
        }
    }
    auto t = build_table(classes);
    fs::create_directories(p.parent_path(), ec);
    fs::path tmp = p;
    tmp += ".tmp" + hex64(fnv1a64(p.string() + std::to_string(reinterpret_cast<uintptr_t>(&ev))));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << serialize_table(*t);
        if (!out) {
            if (ev.warning.empty()) ev.warning = "could not write cache file " + p.string();
            return t;
        }
    }
    fs::rename(tmp, p, ec);
    if (ec && ev.warning.empty()) ev.warning = "could not store cache file " + p.string() + ": " + ec.message();
    return t;
}

}  // namespace cclab
