"""Built-in English stopword list.

Pinned in the repository so that corpus builds are reproducible across
environments; configs may add or remove words but the base list never
changes silently.
"""

from __future__ import annotations

STOPWORDS: frozenset[str] = frozenset(
    {
        "a", "about", "above", "after", "again", "against", "all", "also",
        "am", "an", "and", "any", "are", "as", "at", "be", "because", "been",
        "before", "being", "below", "between", "both", "but", "by", "can",
        "cannot", "could", "did", "do", "does", "doing", "down", "during",
        "each", "either", "else", "etc", "ever", "every", "few", "for",
        "from", "further", "had", "has", "have", "having", "he", "her",
        "here", "hers", "herself", "him", "himself", "his", "how", "however",
        "i", "if", "in", "into", "is", "it", "its", "itself", "just", "may",
        "me", "might", "more", "most", "must", "my", "myself", "neither",
        "no", "nor", "not", "now", "of", "off", "on", "once", "only", "onto",
        "or", "other", "otherwise", "our", "ours", "ourselves", "out",
        "over", "own", "per", "same", "shall", "she", "should", "since",
        "so", "some", "such", "than", "that", "the", "their", "theirs",
        "them", "themselves", "then", "there", "these", "they", "this",
        "those", "through", "to", "too", "under", "until", "up", "upon",
        "us", "very", "via", "was", "we", "were", "what", "when", "where",
        "whether", "which", "while", "who", "whom", "why", "will", "with",
        "within", "without", "would", "yet", "you", "your", "yours",
        "yourself", "yourselves",
    }
)
