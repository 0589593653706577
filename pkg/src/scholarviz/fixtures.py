"""Shipped fixture data: a curated desk-scale concept taxonomy and a seeded
synthetic scholar corpus.

The taxonomy is hand-written constant data (file order is meaningful: it
fixes pagination order). The scholar corpus is generated from a SplitMix64
stream so a given seed always produces byte-identical files.

Note on "Ab Itinio": the recorded expansion list for AI keeps that spelling
on purpose; see the README.
"""

from __future__ import annotations

import json

from .rng import SplitMix64

# Order matters: narrower-concept lists derive from the order records appear.
TAXONOMY_RECORDS: tuple[dict, ...] = (
    # upper ontology
    {"id": "science", "label": "Science", "super": []},
    {"id": "technology", "label": "Technology", "super": []},
    {"id": "cs", "label": "computer science", "super": ["science"]},
    {"id": "emerging-technology", "label": "Emerging technology", "super": ["technology"]},
    {"id": "mathematics", "label": "Mathematics", "super": ["science"]},
    {"id": "economics", "label": "Economics", "super": ["science"]},
    {"id": "statistics", "label": "Statistics", "super": ["mathematics"]},
    {"id": "data-management", "label": "Data management", "super": ["cs"]},
    # AI cluster; AI keeps exactly nine narrower concepts
    {
        "id": "ai",
        "label": "AI",
        "super": ["emerging-technology", "cs"],
        "expansions": ["Artificial Intelligence", "Asymmetric Information", "Ab Itinio"],
    },
    {
        "id": "artificial-intelligence",
        "label": "Artificial Intelligence",
        "super": ["emerging-technology", "cs"],
    },
    {"id": "machine-learning", "label": "Machine learning",
     "super": ["ai", "artificial-intelligence"], "translations": {"zh": "机器学习"}},
    {"id": "nlp", "label": "Natural Language Processing",
     "super": ["ai", "artificial-intelligence"]},
    {"id": "self-driving", "label": "Self-Driving", "super": ["ai"]},
    {"id": "computer-vision", "label": "Computer Vision",
     "super": ["ai", "artificial-intelligence"]},
    {"id": "expert-system", "label": "Expert system", "super": ["ai"]},
    {"id": "robotics", "label": "Robotics", "super": ["ai"]},
    {"id": "speech-recognition", "label": "Speech recognition", "super": ["ai"]},
    {"id": "planning-scheduling", "label": "Planning and scheduling", "super": ["ai"]},
    {"id": "knowledge-representation", "label": "Knowledge representation",
     "super": ["ai", "artificial-intelligence"]},
    # machine learning cluster
    {"id": "deep-learning", "label": "Deep learning",
     "super": ["machine-learning"], "translations": {"zh": "深度学习"}},
    {"id": "classification", "label": "Classification",
     "super": ["machine-learning", "data-mining"]},
    {"id": "clustering", "label": "Clustering", "super": ["machine-learning", "data-mining"]},
    {"id": "regression", "label": "Regression", "super": ["machine-learning", "statistics"]},
    {"id": "reinforcement-learning", "label": "Reinforcement learning",
     "super": ["machine-learning"]},
    {"id": "neural-network", "label": "Neural network", "super": ["deep-learning"]},
    {"id": "cnn", "label": "CNN", "super": ["neural-network"],
     "expansions": ["Convolutional Neural Network", "Cable News Network"]},
    {"id": "convolutional-neural-network", "label": "Convolutional Neural Network",
     "super": ["neural-network"]},
    {"id": "decision-tree", "label": "Decision tree", "super": ["classification"]},
    {"id": "support-vector-machine", "label": "Support vector machine",
     "super": ["classification"]},
    {"id": "naive-bayes", "label": "Naive Bayes", "super": ["classification"]},
    # natural language processing cluster
    {"id": "machine-translation", "label": "Machine translation", "super": ["nlp"]},
    {"id": "sentiment-analysis", "label": "Sentiment analysis", "super": ["nlp"]},
    {"id": "named-entity-recognition", "label": "Named entity recognition", "super": ["nlp"]},
    {"id": "question-answering", "label": "Question answering", "super": ["nlp"]},
    # computer vision cluster
    {"id": "object-detection", "label": "Object detection", "super": ["computer-vision"]},
    {"id": "image-segmentation", "label": "Image segmentation", "super": ["computer-vision"]},
    {"id": "face-recognition", "label": "Face recognition", "super": ["computer-vision"]},
    # data cluster
    {"id": "data-mining", "label": "Data mining", "super": ["cs"]},
    {"id": "data-integration", "label": "Data integration", "super": ["data-management"]},
    {"id": "knowledge-reasoning", "label": "Knowledge reasoning", "super": [],
     "translations": {"zh": "知识推理"}},
    {"id": "association-rule-learning", "label": "Association rule learning",
     "super": ["data-mining"]},
    {"id": "anomaly-detection", "label": "Anomaly detection", "super": ["data-mining"]},
    {"id": "text-mining", "label": "Text mining", "super": ["data-mining", "nlp"]},
    {"id": "social-network-analysis", "label": "Social network analysis",
     "super": ["data-mining"]},
    {"id": "big-data", "label": "Big data", "super": ["data-management", "emerging-technology"]},
    {"id": "data-warehouse", "label": "Data warehouse", "super": ["data-management"]},
    # emerging technology cluster
    {"id": "blockchain", "label": "Blockchain", "super": ["emerging-technology"]},
    {"id": "quantum-computing", "label": "Quantum computing", "super": ["emerging-technology"]},
    {"id": "internet-of-things", "label": "Internet of Things", "super": ["emerging-technology"]},
    # economics
    {"id": "asymmetric-information", "label": "Asymmetric Information", "super": ["economics"]},
    {"id": "game-theory", "label": "Game theory", "super": ["economics", "mathematics"]},
    # broader computer science
    {"id": "algorithm", "label": "Algorithm", "super": ["cs", "mathematics"]},
    {"id": "database", "label": "Database", "super": ["cs"]},
    {"id": "information-retrieval", "label": "Information retrieval", "super": ["cs"]},
    {"id": "search-engine", "label": "Search engine", "super": ["information-retrieval"]},
    {"id": "ranking", "label": "Ranking", "super": ["information-retrieval"]},
    {"id": "human-computer-interaction", "label": "Human-Computer Interaction", "super": ["cs"]},
    {"id": "visualization", "label": "Visualization", "super": ["cs", "human-computer-interaction"]},
    {"id": "graph-drawing", "label": "Graph drawing", "super": ["visualization"]},
    {"id": "information-visualization", "label": "Information visualization",
     "super": ["visualization"]},
    {"id": "knowledge-graph", "label": "Knowledge graph", "super": ["knowledge-representation"]},
    {"id": "ontology", "label": "Ontology", "super": ["knowledge-representation"]},
)

#: Keyword pool for the synthetic scholars; all are taxonomy labels.
SCHOLAR_KEYWORD_POOL: tuple[str, ...] = (
    "machine learning", "classification", "data mining", "deep learning",
    "computer vision", "natural language processing", "clustering",
    "reinforcement learning", "neural network", "information retrieval",
    "knowledge graph", "data integration", "visualization", "ranking",
    "object detection", "sentiment analysis", "question answering",
    "anomaly detection", "text mining", "social network analysis",
)

_GIVEN_NAMES = (
    "Wei", "Li", "Hao", "Yun", "Jing", "Ming", "Anna", "Boris", "Carla",
    "David", "Elena", "Felix", "Grace", "Hiro", "Ingrid", "Jorge", "Kavya",
    "Liam", "Mona", "Noor",
)
_FAMILY_NAMES = (
    "Zhang", "Wang", "Chen", "Liu", "Yang", "Huang", "Kim", "Sato", "Singh",
    "Patel", "Novak", "Silva", "Müller", "Dubois", "Rossi", "Kowalski",
    "Johnson", "Brown", "García", "Okafor", "Haddad", "Larsen", "Ivanov",
    "Costa", "Nakamura",
)
_AFFILIATIONS = (
    "Lakeshore University", "Northgate Institute of Technology",
    "Redwood State University", "Harborview University", "Summit College",
    "Easton Polytechnic", "Westbrook University", "Pinecrest Institute",
    "Riverbend University", "Stonebridge University", "Clearwater Institute",
    "Maplewood University",
)


def taxonomy_jsonl() -> str:
    """The curated taxonomy as a JSON-Lines document."""
    return "\n".join(json.dumps(rec, ensure_ascii=False) for rec in TAXONOMY_RECORDS) + "\n"


def generate_scholars(seed: int, count: int = 200) -> list[dict]:
    """Synthetic scholar records, fully determined by the seed."""
    rng = SplitMix64(seed)
    scholars: list[dict] = []
    for i in range(count):
        given = _GIVEN_NAMES[rng.next_below(len(_GIVEN_NAMES))]
        family = _FAMILY_NAMES[rng.next_below(len(_FAMILY_NAMES))]
        affiliation = _AFFILIATIONS[rng.next_below(len(_AFFILIATIONS))]

        n_keywords = 2 + rng.next_below(4)  # 2..5
        pool = list(SCHOLAR_KEYWORD_POOL)
        keywords = []
        for _ in range(n_keywords):
            label = pool.pop(rng.next_below(len(pool)))
            # coarse two-decimal weights make exact score ties common,
            # which exercises the citation tie-break
            weight = (1 + rng.next_below(20)) * 0.05
            keywords.append({"label": label, "weight": round(weight, 2)})

        scholars.append(
            {
                "id": f"s{i + 1:03d}",
                "name": f"{given} {family}",
                "affiliation": affiliation,
                "keywords": keywords,
                "citations": rng.next_below(20001),
                "paper_count": 1 + rng.next_below(400),
            }
        )
    return scholars


def scholars_jsonl(seed: int, count: int = 200) -> str:
    """The synthetic corpus as a JSON-Lines document."""
    return (
        "\n".join(json.dumps(rec, ensure_ascii=False) for rec in generate_scholars(seed, count))
        + "\n"
    )
