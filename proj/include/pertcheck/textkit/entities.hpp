#pragma once

#include <string>

#include "pertcheck/core/strings.hpp"
#include "pertcheck/textkit/lexicon.hpp"
#include "pertcheck/textkit/tagger.hpp"
#include "pertcheck/textkit/token.hpp"

namespace pertcheck::textkit {

// Gazetteer-plus-capitalization entity marking. A token becomes an entity
// when it is a capitalized gazetteer hit, or a capitalized noun that is not
// sentence-initial. Sentence-initial gazetteer hits still count when the
// token was tagged as a noun (closed-class words like "Will" stay clear).
inline TaggedSentence detect_entities(const TaggedSentence& tagged, const Lexicon& lex) {
    TaggedSentence out = tagged;
    bool sentence_start = true;
    for (std::size_t i = 0; i < out.tokens.size(); ++i) {
        Token& tok = out.tokens[i];
        if (tok.pos == Pos::Punct) {
            char c = tok.text.empty() ? ' ' : tok.text[0];
            if (c == '.' || c == '!' || c == '?') sentence_start = true;
            continue;
        }
        const bool at_start = sentence_start;
        sentence_start = false;
        tok.entity = Entity::None;

        if (!starts_upper(tok.text)) continue;
        const bool nounish = tok.pos == Pos::Noun;

        if (lex.is_person_name(tok.text)) {
            if (!at_start || nounish) tok.entity = Entity::Person;
            continue;
        }
        if (lex.is_place_name(tok.text)) {
            if (!at_start || nounish) tok.entity = Entity::Location;
            continue;
        }
        if (nounish && !at_start && !tok.is_stopword) {
            // Unknown capitalized noun mid-sentence; corporate suffixes go
            // to ORG, everything else defaults to PERSON.
            const std::string low = to_lower(tok.text);
            if (ends_with(low, "corp") || ends_with(low, "inc") || ends_with(low, "ltd") ||
                is_all_upper(tok.text))
                tok.entity = Entity::Org;
            else
                tok.entity = Entity::Person;
        }
    }
    return out;
}

} // namespace pertcheck::textkit
