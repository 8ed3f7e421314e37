#pragma once

#include <string>
#include <string_view>

namespace privysense::text {

// Porter stemming algorithm as published in 1980 ("An algorithm for suffix
// stripping"), program-faithful: conditions are evaluated on the stem that
// remains after the candidate suffix is removed, suffix checks within a step
// are longest-match, and words of length <= 2 are left alone.
class PorterStemmer {
public:
    static std::string stem(std::string_view word) {
        if (word.size() <= 2) return std::string(word);
        PorterStemmer p(word);
        p.step1ab();
        p.step1c();
        p.step2();
        p.step3();
        p.step4();
        p.step5();
        return p.b_.substr(0, p.k_ + 1);
    }

private:
    explicit PorterStemmer(std::string_view word)
        : b_(word), k_(word.size() - 1) {}

    std::string b_;
    size_t k_;      // last index of the live word
    size_t j_ = 0;  // last index of the stem once a suffix candidate matched

    bool is_cons(size_t i) const {
        switch (b_[i]) {
            case 'a': case 'e': case 'i': case 'o': case 'u':
                return false;
            case 'y':
                return i == 0 ? true : !is_cons(i - 1);
            default:
                return true;
        }
    }

    // number of VC sequences in the stem b_[0..j_]
    int measure() const {
        int n = 0;
        size_t i = 0;
        while (true) {
            if (i > j_) return n;
            if (!is_cons(i)) break;
            ++i;
        }
        ++i;
        while (true) {
            while (true) {
                if (i > j_) return n;
                if (is_cons(i)) break;
                ++i;
            }
            ++i;
            ++n;
            while (true) {
                if (i > j_) return n;
                if (!is_cons(i)) break;
                ++i;
            }
            ++i;
        }
    }

    bool vowel_in_stem() const {
        for (size_t i = 0; i <= j_; ++i)
            if (!is_cons(i)) return true;
        return false;
    }

    bool double_cons(size_t i) const {
        if (i < 1) return false;
        if (b_[i] != b_[i - 1]) return false;
        return is_cons(i);
    }

    // stem ends consonant-vowel-consonant and the final consonant is not
    // w, x or y
    bool cvc(size_t i) const {
        if (i < 2 || !is_cons(i) || is_cons(i - 1) || !is_cons(i - 2)) return false;
        char c = b_[i];
        return c != 'w' && c != 'x' && c != 'y';
    }

    bool ends(std::string_view s) {
        if (s.size() > k_ + 1) return false;
        if (b_.compare(k_ + 1 - s.size(), s.size(), s) != 0) return false;
        j_ = k_ - s.size();
        return true;
    }

    void set_to(std::string_view s) {
        b_.replace(j_ + 1, k_ - j_, s);
        k_ = j_ + s.size();
    }

    void replace_if_m(std::string_view s) {
        if (measure() > 0) set_to(s);
    }

    void step1ab() {
        if (b_[k_] == 's') {
            if (ends("sses")) k_ -= 2;
            else if (ends("ies")) set_to("i");
            else if (b_[k_ - 1] != 's') --k_;
        }
        if (ends("eed")) {
            if (measure() > 0) --k_;
        } else if ((ends("ed") || ends("ing")) && vowel_in_stem()) {
            k_ = j_;
            if (ends("at")) set_to("ate");
            else if (ends("bl")) set_to("ble");
            else if (ends("iz")) set_to("ize");
            else if (double_cons(k_)) {
                --k_;
                char c = b_[k_];
                if (c == 'l' || c == 's' || c == 'z') ++k_;
            } else if (measure() == 1 && cvc(k_)) {
                set_to("e");
            }
        }
    }

    void step1c() {
        if (ends("y") && vowel_in_stem()) b_[k_] = 'i';
    }

    void step2() {
        if (k_ < 1) return;
        switch (b_[k_ - 1]) {
            case 'a':
                if (ends("ational")) { replace_if_m("ate"); break; }
                if (ends("tional")) { replace_if_m("tion"); break; }
                break;
            case 'c':
                if (ends("enci")) { replace_if_m("ence"); break; }
                if (ends("anci")) { replace_if_m("ance"); break; }
                break;
            case 'e':
                if (ends("izer")) { replace_if_m("ize"); break; }
                break;
            case 'l':
                if (ends("abli")) { replace_if_m("able"); break; }
                if (ends("alli")) { replace_if_m("al"); break; }
                if (ends("entli")) { replace_if_m("ent"); break; }
                if (ends("eli")) { replace_if_m("e"); break; }
                if (ends("ousli")) { replace_if_m("ous"); break; }
                break;
            case 'o':
                if (ends("ization")) { replace_if_m("ize"); break; }
                if (ends("ation")) { replace_if_m("ate"); break; }
                if (ends("ator")) { replace_if_m("ate"); break; }
                break;
            case 's':
                if (ends("alism")) { replace_if_m("al"); break; }
                if (ends("iveness")) { replace_if_m("ive"); break; }
                if (ends("fulness")) { replace_if_m("ful"); break; }
                if (ends("ousness")) { replace_if_m("ous"); break; }
                break;
            case 't':
                if (ends("aliti")) { replace_if_m("al"); break; }
                if (ends("iviti")) { replace_if_m("ive"); break; }
                if (ends("biliti")) { replace_if_m("ble"); break; }
                break;
            default:
                break;
        }
    }

    void step3() {
        switch (b_[k_]) {
            case 'e':
                if (ends("icate")) { replace_if_m("ic"); break; }
                if (ends("ative")) { replace_if_m(""); break; }
                if (ends("alize")) { replace_if_m("al"); break; }
                break;
            case 'i':
                if (ends("iciti")) { replace_if_m("ic"); break; }
                break;
            case 'l':
                if (ends("ical")) { replace_if_m("ic"); break; }
                if (ends("ful")) { replace_if_m(""); break; }
                break;
            case 's':
                if (ends("ness")) { replace_if_m(""); break; }
                break;
            default:
                break;
        }
    }

    void step4() {
        if (k_ < 1) return;
        bool matched = false;
        switch (b_[k_ - 1]) {
            case 'a': matched = ends("al"); break;
            case 'c': matched = ends("ance") || ends("ence"); break;
            case 'e': matched = ends("er"); break;
            case 'i': matched = ends("ic"); break;
            case 'l': matched = ends("able") || ends("ible"); break;
            case 'n':
                matched = ends("ant") || ends("ement") || ends("ment") || ends("ent");
                break;
            case 'o':
                matched = (k_ >= 3 && ends("ion") && (b_[j_] == 's' || b_[j_] == 't')) ||
                          ends("ou");
                break;
            case 's': matched = ends("ism"); break;
            case 't': matched = ends("ate") || ends("iti"); break;
            case 'u': matched = ends("ous"); break;
            case 'v': matched = ends("ive"); break;
            case 'z': matched = ends("ize"); break;
            default: break;
        }
        if (matched && measure() > 1) k_ = j_;
    }

    void step5() {
        j_ = k_;
        if (b_[k_] == 'e') {
            int a = measure();
            if (a > 1 || (a == 1 && !cvc(k_ - 1))) --k_;
        }
        if (b_[k_] == 'l' && double_cons(k_) && measure() > 1) --k_;
    }
};

inline std::string porter_stem(std::string_view word) { return PorterStemmer::stem(word); }

}  // namespace privysense::text
