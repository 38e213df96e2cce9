#include "exhauster/document.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "exhauster/error.hpp"

namespace exh {

namespace {

using nlohmann::json;

std::size_t line_of(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') ++line;
    }
    return line;
}

// Line on which each record of the top-level "bodies" array opens
// (objects at nesting depth 2).
std::vector<std::size_t> record_lines(std::string_view text) {
    std::vector<std::size_t> lines;
    std::size_t line = 1;
    int depth = 0;
    bool in_string = false;
    bool escaped = false;
    for (char ch : text) {
        if (ch == '\n') ++line;
        if (in_string) {
            if (escaped) {
                escaped = false;
            } else if (ch == '\\') {
                escaped = true;
            } else if (ch == '"') {
                in_string = false;
            }
            continue;
        }
        switch (ch) {
            case '"': in_string = true; break;
            case '{':
            case '[':
                if (ch == '{' && depth == 2) lines.push_back(line);
                ++depth;
                break;
            case '}':
            case ']': --depth; break;
            default: break;
        }
    }
    return lines;
}

struct RecordContext {
    std::size_t line;
    std::size_t index;

    [[noreturn]] void fail(const std::string& field, const std::string& what) const {
        throw ParseError("body " + std::to_string(index) + ": " + what, line, field);
    }
};

Point2 read_point(const json& j, const RecordContext& ctx, const std::string& field) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        ctx.fail(field, "expected [x, y] with numeric coordinates");
    }
    const double x = j[0].get<double>();
    const double y = j[1].get<double>();
    if (!std::isfinite(x) || !std::isfinite(y)) {
        throw ValidationError("line " + std::to_string(ctx.line) + ": body " + std::to_string(ctx.index) +
                              ": non-finite coordinate in '" + field + "'");
    }
    return {x, y};
}

std::vector<Point2> read_points(const json& j, const RecordContext& ctx, const std::string& field) {
    if (!j.is_array()) ctx.fail(field, "expected an array of [x, y] pairs");
    std::vector<Point2> pts;
    for (std::size_t k = 0; k < j.size(); ++k) pts.push_back(read_point(j[k], ctx, field + "[" + std::to_string(k) + "]"));
    return pts;
}

ConvexBody read_body(const json& rec, const RecordContext& ctx) {
    if (!rec.is_object()) ctx.fail("", "body record must be an object");
    if (!rec.contains("type") || !rec["type"].is_string()) ctx.fail("type", "missing or non-string 'type'");
    const std::string type = rec["type"].get<std::string>();

    std::set<std::string> allowed{"type", "label"};
    if (type == "polygon") {
        allowed.insert("vertices");
    } else if (type == "point") {
        allowed.insert("point");
    } else if (type == "segment") {
        allowed.insert("endpoints");
    } else if (type == "disc") {
        allowed.insert({"center", "radius"});
    } else {
        ctx.fail("type", "unknown body type '" + type + "'");
    }
    for (const auto& [key, value] : rec.items()) {
        if (!allowed.count(key)) ctx.fail(key, "unknown field for a " + type + " record");
    }
    for (const auto& key : allowed) {
        if (key != "label" && !rec.contains(key)) ctx.fail(key, "missing field");
    }

    std::string label;
    if (rec.contains("label")) {
        if (!rec["label"].is_string()) ctx.fail("label", "label must be a string");
        label = rec["label"].get<std::string>();
    }

    auto validated = [&](auto&& make) {
        try {
            return make();
        } catch (const ValidationError& e) {
            throw ValidationError("line " + std::to_string(ctx.line) + ": body " + std::to_string(ctx.index) + ": " +
                                  e.what());
        }
    };

    if (type == "disc") {
        const Point2 center = read_point(rec["center"], ctx, "center");
        if (!rec["radius"].is_number()) ctx.fail("radius", "radius must be a number");
        const double radius = rec["radius"].get<double>();
        return validated([&] { return ConvexBody::disc(center, radius, label); });
    }
    std::vector<Point2> pts;
    if (type == "point") {
        pts.push_back(read_point(rec["point"], ctx, "point"));
    } else if (type == "segment") {
        pts = read_points(rec["endpoints"], ctx, "endpoints");
        if (pts.size() != 2) ctx.fail("endpoints", "a segment needs exactly two endpoints");
    } else {
        pts = read_points(rec["vertices"], ctx, "vertices");
    }
    return validated([&] { return ConvexBody::polygon(pts, label); });
}

void write_point(std::ostream& os, const Point2& p) {
    os << '[' << format_real(p.x) << ", " << format_real(p.y) << ']';
}

}  // namespace

std::string format_real(double value) {
    if (value == 0.0) return "0";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return {buf, res.ptr};
}

Exhauster parse_exhauster(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(e.what(), line_of(text, e.byte == 0 ? 0 : e.byte - 1), "");
    }
    if (!doc.is_object()) throw ParseError("document must be a JSON object", 1, "");
    for (const auto& [key, value] : doc.items()) {
        if (key != "version" && key != "bodies") throw ParseError("unknown top-level field", 1, key);
    }
    if (doc.contains("version")) {
        if (!doc["version"].is_string() || doc["version"].get<std::string>() != kDocumentVersion) {
            throw ParseError("unsupported document version", 1, "version");
        }
    }
    if (!doc.contains("bodies") || !doc["bodies"].is_array()) {
        throw ParseError("missing 'bodies' array", 1, "bodies");
    }
    const auto& recs = doc["bodies"];
    if (recs.empty()) throw ValidationError("exhauster document has no bodies");

    const auto lines = record_lines(text);
    std::vector<ConvexBody> bodies;
    for (std::size_t k = 0; k < recs.size(); ++k) {
        const RecordContext ctx{k < lines.size() ? lines[k] : 1, k};
        bodies.push_back(read_body(recs[k], ctx));
    }
    return Exhauster(std::move(bodies));
}

std::string serialize_exhauster(const Exhauster& ex) {
    std::ostringstream os;
    os << "{\"version\": \"" << kDocumentVersion << "\", \"bodies\": [\n";
    for (std::size_t i = 0; i < ex.size(); ++i) {
        const auto& b = ex[i];
        os << "  {";
        const std::string label = json(b.label()).dump();
        if (b.is_disc()) {
            os << "\"type\": \"disc\", \"label\": " << label << ", \"center\": ";
            write_point(os, b.center());
            os << ", \"radius\": " << format_real(b.radius());
        } else if (b.vertices().size() == 1) {
            os << "\"type\": \"point\", \"label\": " << label << ", \"point\": ";
            write_point(os, b.vertices()[0]);
        } else {
            const bool segment = b.vertices().size() == 2;
            os << "\"type\": \"" << (segment ? "segment" : "polygon") << "\", \"label\": " << label << ", \""
               << (segment ? "endpoints" : "vertices") << "\": [";
            for (std::size_t k = 0; k < b.vertices().size(); ++k) {
                if (k) os << ", ";
                write_point(os, b.vertices()[k]);
            }
            os << ']';
        }
        os << '}' << (i + 1 < ex.size() ? "," : "") << '\n';
    }
    os << "]}\n";
    return os.str();
}

Exhauster load_exhauster(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_exhauster(buf.str());
}

void save_exhauster(const Exhauster& ex, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path.string() + "'");
    out << serialize_exhauster(ex);
}

}  // namespace exh
