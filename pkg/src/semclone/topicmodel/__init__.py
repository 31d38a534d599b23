"""Comment channel: dictionary, document-term matrix, topic model trained
by collapsed Gibbs sampling, and grouping of files by dominant topic."""

from semclone.topicmodel.dictionary import (
    Dictionary,
    DocTermMatrix,
    build_dictionary,
    build_doc_term,
)
from semclone.topicmodel.gibbs import (
    TopicModel,
    dominant_topic,
    fold_in,
    load_model,
    save_model,
    train_lda,
)
from semclone.topicmodel.grouping import form_clone_sets

__all__ = [
    "Dictionary",
    "DocTermMatrix",
    "TopicModel",
    "build_dictionary",
    "build_doc_term",
    "dominant_topic",
    "fold_in",
    "form_clone_sets",
    "load_model",
    "save_model",
    "train_lda",
]
