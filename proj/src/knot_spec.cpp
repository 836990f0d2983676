#include "l2alex/knot_spec.hpp"

#include <numeric>

#include "l2alex/catalog.hpp"
#include "l2alex/errors.hpp"

namespace l2alex {

KnotSpec KnotSpec::catalog(std::string name) {
    if (!catalog_has(name)) throw validation_error("unknown catalog name '" + name + "'");
    KnotSpec k;
    k.kind_ = Kind::catalog;
    k.name_ = std::move(name);
    return k;
}

KnotSpec KnotSpec::braid(Braid b) {
    KnotSpec k;
    k.kind_ = Kind::braid;
    k.braid_ = std::move(b);
    return k;
}

KnotSpec KnotSpec::fibered(int genus, FreeAutomorphism phi) {
    if (genus < 1) throw validation_error("fibered spec needs genus >= 1");
    if (phi.rank() != 2 * genus)
        throw invalid_automorphism_error("monodromy rank does not match genus");
    KnotSpec k;
    k.kind_ = Kind::fibered;
    k.genus_ = genus;
    k.phi_ = std::move(phi);
    return k;
}

KnotSpec KnotSpec::sum(KnotSpec left, KnotSpec right) {
    KnotSpec k;
    k.kind_ = Kind::sum;
    k.children_.push_back(std::make_shared<const KnotSpec>(std::move(left)));
    k.children_.push_back(std::make_shared<const KnotSpec>(std::move(right)));
    return k;
}

KnotSpec KnotSpec::cable(int p, int q, KnotSpec companion) {
    if (p == 0) throw validation_error("cable parameter p must be nonzero");
    if (std::gcd(p, q) != 1) throw validation_error("cable parameters must be coprime");
    KnotSpec k;
    k.kind_ = Kind::cable;
    k.p_ = p;
    k.q_ = q;
    k.children_.push_back(std::make_shared<const KnotSpec>(std::move(companion)));
    return k;
}

KnotSpec KnotSpec::mirror(KnotSpec inner) {
    KnotSpec k;
    k.kind_ = Kind::mirror;
    k.children_.push_back(std::make_shared<const KnotSpec>(std::move(inner)));
    return k;
}

KnotSpec KnotSpec::reverse(KnotSpec inner) {
    KnotSpec k;
    k.kind_ = Kind::reverse;
    k.children_.push_back(std::make_shared<const KnotSpec>(std::move(inner)));
    return k;
}

namespace {

nlohmann::json word_to_json(const Word& w) {
    nlohmann::json runs = nlohmann::json::array();
    for (const Run& r : w.runs()) runs.push_back({r.gen, r.exp});
    return runs;
}

Word word_from_json(const nlohmann::json& j) {
    std::vector<Run> runs;
    for (const auto& r : j)
        runs.push_back({r.at(0).get<std::int32_t>(), r.at(1).get<std::int32_t>()});
    return Word::from_runs(runs);
}

} // namespace

KnotSpec KnotSpec::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("type"))
        throw validation_error("knot spec JSON must be an object with a 'type' field");
    const std::string type = j.at("type").get<std::string>();
    if (type == "catalog") return catalog(j.at("name").get<std::string>());
    if (type == "braid") return braid(parse_braid(j.at("word").get<std::string>()));
    if (type == "fibered") {
        std::vector<Word> img, inv;
        for (const auto& w : j.at("images")) img.push_back(word_from_json(w));
        for (const auto& w : j.at("inverse_images")) inv.push_back(word_from_json(w));
        return fibered(j.at("genus").get<int>(),
                       FreeAutomorphism(std::move(img), std::move(inv)));
    }
    if (type == "sum") return sum(from_json(j.at("left")), from_json(j.at("right")));
    if (type == "cable")
        return cable(j.at("p").get<int>(), j.at("q").get<int>(), from_json(j.at("companion")));
    if (type == "mirror") return mirror(from_json(j.at("inner")));
    if (type == "reverse") return reverse(from_json(j.at("inner")));
    throw validation_error("unknown knot spec type '" + type + "'");
}

nlohmann::json KnotSpec::to_json() const {
    nlohmann::json j;
    switch (kind_) {
        case Kind::catalog:
            j["type"] = "catalog";
            j["name"] = name_;
            break;
        case Kind::braid: {
            j["type"] = "braid";
            std::string word;
            for (int letter : braid_.letters) {
                if (!word.empty()) word += ' ';
                word += 's' + std::to_string(std::abs(letter));
                if (letter < 0) word += "^-1";
            }
            j["word"] = word;
            break;
        }
        case Kind::fibered: {
            j["type"] = "fibered";
            j["genus"] = genus_;
            nlohmann::json img = nlohmann::json::array();
            nlohmann::json inv = nlohmann::json::array();
            for (const Word& w : phi_.images()) img.push_back(word_to_json(w));
            for (const Word& w : phi_.inverse_images()) inv.push_back(word_to_json(w));
            j["images"] = img;
            j["inverse_images"] = inv;
            break;
        }
        case Kind::sum:
            j["type"] = "sum";
            j["left"] = left().to_json();
            j["right"] = right().to_json();
            break;
        case Kind::cable:
            j["type"] = "cable";
            j["p"] = p_;
            j["q"] = q_;
            j["companion"] = inner().to_json();
            break;
        case Kind::mirror:
            j["type"] = "mirror";
            j["inner"] = inner().to_json();
            break;
        case Kind::reverse:
            j["type"] = "reverse";
            j["inner"] = inner().to_json();
            break;
    }
    return j;
}

KnotSpec KnotSpec::parse(const std::string& text) {
    if (text.rfind("catalog:", 0) == 0) return catalog(text.substr(8));
    if (text.rfind("braid:", 0) == 0) return braid(parse_braid(text.substr(6)));
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("knot spec is not valid JSON: ") + e.what(),
                          static_cast<std::size_t>(e.byte));
    }
    return from_json(j);
}

std::string KnotSpec::display() const {
    switch (kind_) {
        case Kind::catalog:
            return name_;
        case Kind::braid:
            return "braid[" + std::to_string(braid_.letters.size()) + " letters]";
        case Kind::fibered:
            return "fibered[g=" + std::to_string(genus_) + "]";
        case Kind::sum:
            return left().display() + " # " + right().display();
        case Kind::cable:
            return "C(" + std::to_string(p_) + "," + std::to_string(q_) + ")(" +
                   inner().display() + ")";
        case Kind::mirror:
            return "mirror(" + inner().display() + ")";
        case Kind::reverse:
            return "reverse(" + inner().display() + ")";
    }
    return "?";
}

long long nth_prime(int n) {
    if (n < 0) throw validation_error("prime index must be nonnegative");
    long long candidate = 1;
    for (int found = -1; found < n;) {
        ++candidate;
        bool prime = candidate >= 2;
        for (long long d = 2; d * d <= candidate; ++d)
            if (candidate % d == 0) {
                prime = false;
                break;
            }
        if (prime) ++found;
    }
    return candidate;
}

std::pair<KnotSpec, KnotSpec> build_family(int n) {
    const long long p = nth_prime(n);
    KnotSpec j = KnotSpec::catalog("4_1");
    for (long long i = 0; i < p - 1; ++i)
        j = KnotSpec::sum(std::move(j), KnotSpec::catalog("3_1"));
    KnotSpec k = KnotSpec::cable(static_cast<int>(p), 1, KnotSpec::catalog("4_1"));
    return {std::move(j), std::move(k)};
}

} // namespace l2alex
