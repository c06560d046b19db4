#pragma once

// Minimal well-formedness check for the SVG subset we emit: balanced,
// properly nested tags, quoted attributes, escaped text.

#include <string>
#include <vector>

namespace gtz::testing {

inline bool well_formed_xml(const std::string& doc, std::string* why = nullptr) {
    auto fail = [&](std::string msg) {
        if (why) *why = std::move(msg);
        return false;
    };
    std::vector<std::string> stack;
    std::size_t i = 0;
    bool root_seen = false;
    while (i < doc.size()) {
        if (doc[i] != '<') {
            if (doc[i] == '>') return fail("stray '>' at " + std::to_string(i));
            if (doc[i] == '&') {
                auto semi = doc.find(';', i);
                if (semi == std::string::npos || semi - i > 6) return fail("bad entity at " + std::to_string(i));
            }
            if (stack.empty() && !std::isspace(static_cast<unsigned char>(doc[i])))
                return fail("text outside root at " + std::to_string(i));
            ++i;
            continue;
        }
        auto close = doc.find('>', i);
        if (close == std::string::npos) return fail("unterminated tag");
        std::string tag = doc.substr(i + 1, close - i - 1);
        i = close + 1;
        if (tag.starts_with("?")) {
            if (!tag.ends_with("?")) return fail("bad declaration");
            continue;
        }
        if (tag.starts_with("/")) {
            if (stack.empty() || stack.back() != tag.substr(1)) return fail("mismatched </" + tag.substr(1) + ">");
            stack.pop_back();
            continue;
        }
        bool self_closing = tag.ends_with("/");
        if (self_closing) tag.pop_back();
        auto space = tag.find_first_of(" \n\t");
        std::string name = tag.substr(0, space);
        if (name.empty()) return fail("empty tag name");
        // Attributes: name="value" pairs.
        std::size_t p = space == std::string::npos ? tag.size() : space;
        while (p < tag.size()) {
            while (p < tag.size() && std::isspace(static_cast<unsigned char>(tag[p]))) ++p;
            if (p >= tag.size()) break;
            auto eq = tag.find('=', p);
            if (eq == std::string::npos || eq + 1 >= tag.size() || tag[eq + 1] != '"')
                return fail("unquoted attribute in <" + name + ">");
            auto end = tag.find('"', eq + 2);
            if (end == std::string::npos) return fail("unterminated attribute in <" + name + ">");
            if (tag.substr(eq + 2, end - eq - 2).find('<') != std::string::npos)
                return fail("'<' inside attribute");
            p = end + 1;
        }
        if (stack.empty()) {
            if (root_seen) return fail("second root element");
            root_seen = true;
        }
        if (!self_closing) stack.push_back(name);
    }
    if (!stack.empty()) return fail("unclosed <" + stack.back() + ">");
    return root_seen || fail("no root element");
}

} // namespace gtz::testing
