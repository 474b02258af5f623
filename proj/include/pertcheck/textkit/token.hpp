#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pertcheck::textkit {

// Coarse part-of-speech tagset.
enum class Pos {
    Noun,
    Verb,
    Adj,
    Adv,
    Pron,
    Det,
    Adp,
    Num,
    Punct,
    Wh,
    Aux,
    Other,
};

enum class Entity {
    None,
    Person,
    Location,
    Org,
};

inline const char* to_string(Pos p) {
    switch (p) {
        case Pos::Noun: return "NOUN";
        case Pos::Verb: return "VERB";
        case Pos::Adj: return "ADJ";
        case Pos::Adv: return "ADV";
        case Pos::Pron: return "PRON";
        case Pos::Det: return "DET";
        case Pos::Adp: return "ADP";
        case Pos::Num: return "NUM";
        case Pos::Punct: return "PUNCT";
        case Pos::Wh: return "WH";
        case Pos::Aux: return "AUX";
        case Pos::Other: return "OTHER";
    }
    return "OTHER";
}

inline const char* to_string(Entity e) {
    switch (e) {
        case Entity::None: return "NONE";
        case Entity::Person: return "PERSON";
        case Entity::Location: return "LOCATION";
        case Entity::Org: return "ORG";
    }
    return "NONE";
}

struct Token {
    std::string text;
    Pos pos = Pos::Other;
    bool is_stopword = false;
    Entity entity = Entity::None;
    // Byte offsets [begin, end) into the source string.
    std::size_t begin = 0;
    std::size_t end = 0;
};

struct TaggedSentence {
    std::vector<Token> tokens;
    // Index of the terminal punctuation token, if the sentence has one.
    // When present it is always the last token.
    std::optional<std::size_t> terminal_punct;
};

} // namespace pertcheck::textkit
