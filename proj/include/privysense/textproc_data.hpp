#pragma once

#include <string_view>

namespace privysense::text::data {

// Versioned stoplist: 127 common English function words. Prepositions are
// deliberately absent (the chunk grammar's IN class must survive token
// filtering or "NBAR IN NBAR" could never match). Mirrored in
// data/stoplist.txt; a test keeps file and table in sync.
inline constexpr std::string_view kStoplist[] = {
    "a", "again", "all", "almost", "also", "although", "always", "am", "an",
    "and", "any", "are", "be", "because", "been", "being", "both", "but",
    "can", "could", "did", "do", "does", "doing", "done", "each", "either",
    "even", "ever", "every", "few", "had", "has", "have", "having", "he",
    "her", "here", "hers", "herself", "him", "himself", "his", "how", "i",
    "if", "is", "it", "its", "itself", "just", "may", "me", "might", "mine",
    "more", "most", "much", "must", "my", "myself", "neither", "never", "no",
    "nor", "not", "now", "often", "once", "only", "or", "other", "others",
    "ought", "our", "ours", "ourselves", "own", "quite", "rather", "same",
    "several", "shall", "she", "should", "so", "some", "such", "that", "the",
    "their", "theirs", "them", "themselves", "then", "there", "these", "they",
    "this", "those", "though", "too", "unless", "us", "very", "was", "we",
    "were", "what", "when", "where", "whether", "which", "while", "who",
    "whom", "whose", "why", "will", "would", "yes", "yet", "you", "your",
    "yours", "yourself", "yourselves",
};
static_assert(sizeof(kStoplist) / sizeof(kStoplist[0]) == 127);

struct LexiconEntry {
    std::string_view word;
    char tag;  // N=NN, J=JJ, I=IN, R=RB, V=VB, O=OTHER
};

// Coarse-tag lexicon, consulted before the suffix rules. Closed classes are
// covered exhaustively; open-class entries are either irregular verb forms or
// words the suffix rules would mis-tag for chunking purposes. Mirrored in
// data/lexicon.tsv.
inline constexpr LexiconEntry kLexicon[] = {
    // prepositions / subordinating markers -> IN
    {"aboard", 'I'}, {"about", 'I'}, {"above", 'I'}, {"across", 'I'},
    {"after", 'I'}, {"against", 'I'}, {"along", 'I'}, {"alongside", 'I'},
    {"amid", 'I'}, {"amidst", 'I'}, {"among", 'I'}, {"amongst", 'I'},
    {"around", 'I'}, {"at", 'I'}, {"atop", 'I'}, {"before", 'I'},
    {"behind", 'I'}, {"below", 'I'}, {"beneath", 'I'}, {"beside", 'I'},
    {"besides", 'I'}, {"between", 'I'}, {"beyond", 'I'}, {"by", 'I'},
    {"concerning", 'I'}, {"despite", 'I'}, {"during", 'I'}, {"except", 'I'},
    {"for", 'I'}, {"from", 'I'}, {"in", 'I'}, {"inside", 'I'}, {"into", 'I'},
    {"near", 'I'}, {"of", 'I'}, {"off", 'I'}, {"on", 'I'}, {"onto", 'I'},
    {"outside", 'I'}, {"over", 'I'}, {"past", 'I'}, {"per", 'I'},
    {"regarding", 'I'}, {"since", 'I'}, {"than", 'I'}, {"through", 'I'},
    {"throughout", 'I'}, {"to", 'I'}, {"toward", 'I'}, {"towards", 'I'},
    {"under", 'I'}, {"underneath", 'I'}, {"until", 'I'}, {"unto", 'I'},
    {"upon", 'I'}, {"versus", 'I'}, {"via", 'I'}, {"within", 'I'},
    {"without", 'I'},
    // residual function words -> OTHER (most are stoplisted upstream; tagged
    // here so pos_tag stays sane on unfiltered input)
    {"a", 'O'}, {"all", 'O'}, {"am", 'O'}, {"an", 'O'}, {"and", 'O'},
    {"any", 'O'}, {"are", 'O'}, {"as", 'O'}, {"be", 'O'}, {"because", 'O'},
    {"been", 'O'}, {"being", 'O'}, {"both", 'O'}, {"but", 'O'}, {"can", 'O'},
    {"could", 'O'}, {"did", 'O'}, {"do", 'O'}, {"does", 'O'}, {"each", 'O'},
    {"either", 'O'}, {"every", 'O'}, {"had", 'O'}, {"has", 'O'},
    {"have", 'O'}, {"he", 'O'}, {"her", 'O'}, {"his", 'O'}, {"if", 'O'},
    {"is", 'O'}, {"it", 'O'}, {"its", 'O'}, {"may", 'O'}, {"might", 'O'},
    {"must", 'O'}, {"my", 'O'}, {"no", 'O'}, {"nor", 'O'}, {"not", 'O'},
    {"or", 'O'}, {"our", 'O'}, {"shall", 'O'}, {"she", 'O'}, {"should", 'O'},
    {"so", 'O'}, {"some", 'O'}, {"such", 'O'}, {"that", 'O'}, {"the", 'O'},
    {"their", 'O'}, {"them", 'O'}, {"these", 'O'}, {"they", 'O'},
    {"this", 'O'}, {"those", 'O'}, {"was", 'O'}, {"we", 'O'}, {"were", 'O'},
    {"what", 'O'}, {"whether", 'O'}, {"which", 'O'}, {"while", 'O'},
    {"who", 'O'}, {"will", 'O'}, {"would", 'O'}, {"you", 'O'},
    // adverbs that do not end in -ly -> RB
    {"abroad", 'R'}, {"ago", 'R'}, {"ahead", 'R'}, {"already", 'R'},
    {"also", 'R'}, {"always", 'R'}, {"anywhere", 'R'}, {"apart", 'R'},
    {"aside", 'R'}, {"away", 'R'}, {"else", 'R'}, {"elsewhere", 'R'},
    {"everywhere", 'R'}, {"furthermore", 'R'}, {"hence", 'R'}, {"here", 'R'},
    {"however", 'R'}, {"indeed", 'R'}, {"instead", 'R'}, {"maybe", 'R'},
    {"meanwhile", 'R'}, {"moreover", 'R'}, {"nevertheless", 'R'},
    {"nonetheless", 'R'}, {"nowhere", 'R'}, {"otherwise", 'R'},
    {"perhaps", 'R'}, {"seldom", 'R'}, {"somehow", 'R'}, {"somewhat", 'R'},
    {"somewhere", 'R'}, {"soon", 'R'}, {"there", 'R'}, {"therefore", 'R'},
    {"thus", 'R'}, {"twice", 'R'}, {"very", 'R'},
    // irregular verb forms and common bare verbs -> VB
    {"accept", 'V'}, {"achieve", 'V'}, {"acquire", 'V'}, {"add", 'V'},
    {"agree", 'V'}, {"allow", 'V'}, {"announce", 'V'}, {"appear", 'V'},
    {"appoint", 'V'}, {"approve", 'V'}, {"ask", 'V'}, {"avoid", 'V'},
    {"beat", 'V'}, {"became", 'V'}, {"become", 'V'}, {"began", 'V'},
    {"begin", 'V'}, {"begun", 'V'}, {"bought", 'V'}, {"bring", 'V'},
    {"brought", 'V'}, {"build", 'V'}, {"built", 'V'}, {"buy", 'V'},
    {"came", 'V'}, {"cancel", 'V'}, {"carry", 'V'}, {"chose", 'V'},
    {"chosen", 'V'}, {"climb", 'V'}, {"come", 'V'}, {"confirm", 'V'},
    {"consider", 'V'}, {"continue", 'V'}, {"create", 'V'}, {"cut", 'V'},
    {"dealt", 'V'}, {"decide", 'V'}, {"deliver", 'V'}, {"deny", 'V'},
    {"develop", 'V'}, {"disclose", 'V'}, {"discuss", 'V'}, {"drew", 'V'},
    {"drive", 'V'}, {"drove", 'V'}, {"enable", 'V'}, {"exceed", 'V'},
    {"expect", 'V'}, {"fail", 'V'}, {"fall", 'V'}, {"fallen", 'V'},
    {"feel", 'V'}, {"fell", 'V'}, {"felt", 'V'}, {"fight", 'V'},
    {"find", 'V'}, {"flew", 'V'}, {"fought", 'V'}, {"found", 'V'},
    {"froze", 'V'}, {"frozen", 'V'}, {"gave", 'V'}, {"generate", 'V'},
    {"get", 'V'}, {"give", 'V'}, {"given", 'V'}, {"go", 'V'}, {"gone", 'V'},
    {"got", 'V'}, {"gotten", 'V'}, {"grew", 'V'}, {"grow", 'V'},
    {"grown", 'V'}, {"happen", 'V'}, {"hear", 'V'}, {"heard", 'V'},
    {"held", 'V'}, {"help", 'V'}, {"hid", 'V'}, {"hire", 'V'}, {"hit", 'V'},
    {"hold", 'V'}, {"improve", 'V'}, {"include", 'V'}, {"intend", 'V'},
    {"involve", 'V'}, {"join", 'V'}, {"keep", 'V'}, {"kept", 'V'},
    {"knew", 'V'}, {"know", 'V'}, {"known", 'V'}, {"launch", 'V'},
    {"lead", 'V'}, {"leave", 'V'}, {"led", 'V'}, {"left", 'V'},
    {"lend", 'V'}, {"lent", 'V'}, {"let", 'V'}, {"lose", 'V'},
    {"lost", 'V'}, {"made", 'V'}, {"make", 'V'}, {"mean", 'V'},
    {"meant", 'V'}, {"meet", 'V'}, {"merge", 'V'}, {"met", 'V'},
    {"miss", 'V'}, {"occur", 'V'}, {"paid", 'V'}, {"pay", 'V'},
    {"prevent", 'V'}, {"produce", 'V'}, {"provide", 'V'}, {"put", 'V'},
    {"quit", 'V'}, {"raise", 'V'}, {"ran", 'V'}, {"rang", 'V'},
    {"read", 'V'}, {"receive", 'V'}, {"recover", 'V'}, {"reduce", 'V'},
    {"refuse", 'V'}, {"reject", 'V'}, {"remain", 'V'}, {"remove", 'V'},
    {"require", 'V'}, {"resign", 'V'}, {"resume", 'V'}, {"retire", 'V'},
    {"ride", 'V'}, {"rise", 'V'}, {"risen", 'V'}, {"rode", 'V'},
    {"rose", 'V'}, {"run", 'V'}, {"said", 'V'}, {"sang", 'V'}, {"sat", 'V'},
    {"saw", 'V'}, {"say", 'V'}, {"says", 'V'}, {"scrap", 'V'},
    {"seek", 'V'}, {"seem", 'V'}, {"seen", 'V'}, {"sell", 'V'},
    {"send", 'V'}, {"sent", 'V'}, {"serve", 'V'}, {"settle", 'V'},
    {"shook", 'V'}, {"shot", 'V'}, {"show", 'V'}, {"shown", 'V'},
    {"shrank", 'V'}, {"shut", 'V'}, {"sing", 'V'}, {"sink", 'V'},
    {"sit", 'V'}, {"slash", 'V'}, {"sleep", 'V'}, {"slept", 'V'},
    {"soar", 'V'}, {"sold", 'V'}, {"sought", 'V'}, {"speak", 'V'},
    {"spend", 'V'}, {"spent", 'V'}, {"split", 'V'}, {"spoke", 'V'},
    {"spoken", 'V'}, {"spread", 'V'}, {"stabilize", 'V'}, {"stand", 'V'},
    {"start", 'V'}, {"stay", 'V'}, {"steal", 'V'}, {"stole", 'V'},
    {"stood", 'V'}, {"strengthen", 'V'}, {"strike", 'V'}, {"struck", 'V'},
    {"succeed", 'V'}, {"sue", 'V'}, {"surpass", 'V'}, {"suspend", 'V'},
    {"swam", 'V'}, {"swept", 'V'}, {"take", 'V'}, {"taken", 'V'},
    {"taught", 'V'}, {"teach", 'V'}, {"tell", 'V'}, {"think", 'V'},
    {"thought", 'V'}, {"threw", 'V'}, {"throw", 'V'}, {"thrown", 'V'},
    {"told", 'V'}, {"took", 'V'}, {"tore", 'V'}, {"torn", 'V'},
    {"trim", 'V'}, {"try", 'V'}, {"tumble", 'V'}, {"understand", 'V'},
    {"understood", 'V'}, {"unveil", 'V'}, {"urge", 'V'}, {"vow", 'V'},
    {"wake", 'V'}, {"want", 'V'}, {"warn", 'V'}, {"wear", 'V'},
    {"went", 'V'}, {"win", 'V'}, {"withdraw", 'V'}, {"withdrew", 'V'},
    {"woke", 'V'}, {"won", 'V'}, {"wore", 'V'}, {"worsen", 'V'},
    {"wove", 'V'}, {"write", 'V'}, {"written", 'V'}, {"wrote", 'V'},
    // adjectives the suffix rules miss -> JJ
    {"adjusted", 'J'}, {"annual", 'J'}, {"average", 'J'}, {"bad", 'J'},
    {"bearish", 'J'}, {"best", 'J'}, {"better", 'J'}, {"big", 'J'},
    {"black", 'J'}, {"blue", 'J'}, {"broad", 'J'}, {"bullish", 'J'},
    {"central", 'J'}, {"cheap", 'J'}, {"chief", 'J'}, {"cold", 'J'},
    {"common", 'J'}, {"corporate", 'J'}, {"current", 'J'}, {"daily", 'J'},
    {"deep", 'J'}, {"diluted", 'J'}, {"digital", 'J'}, {"domestic", 'J'},
    {"double", 'J'}, {"early", 'J'}, {"economic", 'J'}, {"emerging", 'J'},
    {"existing", 'J'}, {"expensive", 'J'}, {"federal", 'J'}, {"final", 'J'},
    {"financial", 'J'}, {"fiscal", 'J'}, {"flat", 'J'}, {"foreign", 'J'},
    {"former", 'J'}, {"free", 'J'}, {"full", 'J'}, {"fundamental", 'J'},
    {"global", 'J'}, {"good", 'J'}, {"great", 'J'}, {"green", 'J'},
    {"gross", 'J'}, {"hard", 'J'}, {"high", 'J'}, {"higher", 'J'},
    {"hot", 'J'}, {"huge", 'J'}, {"illegal", 'J'}, {"initial", 'J'},
    {"international", 'J'}, {"key", 'J'}, {"large", 'J'}, {"larger", 'J'},
    {"last", 'J'}, {"late", 'J'}, {"latter", 'J'}, {"leading", 'J'},
    {"legal", 'J'}, {"likely", 'J'}, {"little", 'J'}, {"local", 'J'},
    {"long", 'J'}, {"low", 'J'}, {"lower", 'J'}, {"main", 'J'},
    {"major", 'J'}, {"minor", 'J'}, {"mixed", 'J'}, {"mobile", 'J'},
    {"monthly", 'J'}, {"narrow", 'J'}, {"national", 'J'}, {"net", 'J'},
    {"new", 'J'}, {"next", 'J'}, {"old", 'J'}, {"ongoing", 'J'},
    {"online", 'J'}, {"operating", 'J'}, {"outstanding", 'J'},
    {"overall", 'J'}, {"poor", 'J'}, {"preferred", 'J'}, {"prime", 'J'},
    {"private", 'J'}, {"public", 'J'}, {"quarterly", 'J'}, {"recent", 'J'},
    {"red", 'J'}, {"regional", 'J'}, {"related", 'J'}, {"rich", 'J'},
    {"risky", 'J'}, {"robust", 'J'}, {"safe", 'J'}, {"senior", 'J'},
    {"sharp", 'J'}, {"short", 'J'}, {"slow", 'J'}, {"small", 'J'},
    {"smaller", 'J'}, {"soft", 'J'}, {"solid", 'J'}, {"stable", 'J'},
    {"steep", 'J'}, {"strong", 'J'}, {"stronger", 'J'}, {"technical", 'J'},
    {"tiny", 'J'}, {"top", 'J'}, {"total", 'J'}, {"triple", 'J'},
    {"unexpected", 'J'}, {"vast", 'J'}, {"volatile", 'J'}, {"warm", 'J'},
    {"weak", 'J'}, {"weaker", 'J'}, {"weekly", 'J'}, {"white", 'J'},
    {"whole", 'J'}, {"wide", 'J'}, {"worse", 'J'}, {"worst", 'J'},
    {"yearly", 'J'}, {"young", 'J'},
    // nouns the suffix rules would mis-tag -> NN
    {"ally", 'N'}, {"assembly", 'N'}, {"banking", 'N'}, {"building", 'N'},
    {"ceiling", 'N'}, {"derivative", 'N'}, {"earning", 'N'},
    {"evening", 'N'}, {"executive", 'N'}, {"family", 'N'}, {"filing", 'N'},
    {"funding", 'N'}, {"hearing", 'N'}, {"holding", 'N'}, {"housing", 'N'},
    {"incentive", 'N'}, {"initiative", 'N'}, {"listing", 'N'},
    {"manufacturing", 'N'}, {"marketing", 'N'}, {"meeting", 'N'},
    {"mining", 'N'}, {"monopoly", 'N'}, {"morning", 'N'}, {"objective", 'N'},
    {"offering", 'N'}, {"opening", 'N'}, {"perspective", 'N'},
    {"pricing", 'N'}, {"proceeding", 'N'}, {"rally", 'N'}, {"rating", 'N'},
    {"representative", 'N'}, {"ruling", 'N'}, {"shipping", 'N'},
    {"speed", 'N'}, {"spending", 'N'}, {"supply", 'N'}, {"trading", 'N'},
    {"wedding", 'N'},
};

struct LemmaEntry {
    std::string_view stem;
    std::string_view lemma;
};

// Maps Porter stems back to dictionary words. Every lemma value must stem
// back to its key (or another key with the same value); the test suite
// enforces that, which is what makes normalize() idempotent.
inline constexpr LemmaEntry kLemmaExceptions[] = {
    {"agre", "agree"},         {"analys", "analysis"},
    {"analysi", "analysis"},   {"announc", "announce"},
    {"busi", "business"},      {"chang", "change"},
    {"citi", "city"},          {"compani", "company"},
    {"countri", "country"},    {"daili", "daily"},
    {"decreas", "decrease"},   {"declin", "decline"},
    {"earli", "early"},        {"economi", "economy"},
    {"estim", "estimate"},     {"exchang", "exchange"},
    {"expens", "expense"},     {"famili", "family"},
    {"financ", "finance"},     {"financi", "finance"},
    {"hors", "horse"},         {"incom", "income"},
    {"increas", "increase"},   {"industri", "industry"},
    {"larg", "large"},         {"manag", "manage"},
    {"monthli", "monthly"},    {"movi", "movie"},
    {"offic", "office"},       {"peopl", "people"},
    {"polici", "policy"},      {"qualiti", "quality"},
    {"quarterli", "quarterly"},{"rais", "raise"},
    {"relat", "relate"},       {"releas", "release"},
    {"revenu", "revenue"},     {"secur", "secure"},
    {"servic", "service"},     {"stori", "story"},
    {"strategi", "strategy"},  {"technologi", "technology"},
    {"valu", "value"},         {"weekli", "weekly"},
};

}  // namespace privysense::text::data
