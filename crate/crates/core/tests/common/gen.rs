use chrono::NaiveDate;
use rand::seq::SliceRandom;
use rand::Rng;
use rtvis_core::corpus::UNKNOWN_VENUE;
use rtvis_core::themeriver::FieldSeries;
use rtvis_core::{bucket_of, Granularity, PaperRecord};

const AUTHORS: [&str; 6] = [
    "Ada Lovelace",
    "Brian MacWhinney",
    "Chen Wei",
    "Dora",
    "Émile Zola",
    "Shinji Watanabe",
];
const VENUES: [&str; 4] = ["arXiv", "ICASSP", "Interspeech", UNKNOWN_VENUE];
const FIELDS: [&str; 3] = ["Computer Science", "Medicine", "Psychology"];
const WORDS: [&str; 16] = [
    "speech",
    "model",
    "deep",
    "learning",
    "of",
    "the",
    "Data",
    "2021",
    "x",
    "a",
    "conformer",
    "word2vec",
    "neural,",
    "(attention)",
    "Speech-Recognition",
    "ÉTUDE",
];

/// Random corpus within the acceptance bounds: at most 12 papers, 6 authors,
/// 4 venues and 3 fields.
pub fn random_corpus<R: Rng>(rng: &mut R) -> Vec<PaperRecord> {
    let n = rng.gen_range(0..=12);
    (0..n).map(|i| random_paper(rng, i)).collect()
}

pub fn random_paper<R: Rng>(rng: &mut R, i: usize) -> PaperRecord {
    let author_count = rng.gen_range(1..=4);
    let authors: Vec<String> = AUTHORS
        .choose_multiple(rng, author_count)
        .map(|s| s.to_string())
        .collect();
    let field_count = rng.gen_range(0..=3);
    let fields: Vec<String> = FIELDS
        .choose_multiple(rng, field_count)
        .map(|s| s.to_string())
        .collect();
    let word_count = rng.gen_range(0..8);
    let abstract_text = (0..word_count)
        .map(|_| *WORDS.choose(rng).unwrap())
        .collect::<Vec<_>>()
        .join(" ");
    let pub_date =
        NaiveDate::from_ymd_opt(rng.gen_range(2016..=2021), rng.gen_range(1..=12), rng.gen_range(1..=28)).unwrap();
    let title = format!("Paper {i}: {}", WORDS.choose(rng).unwrap());
    let venue = VENUES.choose(rng).unwrap().to_string();
    PaperRecord {
        id: PaperRecord::content_id(&title, &authors, pub_date, &venue),
        title,
        authors,
        abstract_text,
        pub_date,
        citation_count: rng.gen_range(0..50),
        venue,
        fields_of_study: fields,
    }
}

/// Same-date corpus, used for degenerate-input checks.
pub fn same_date_corpus<R: Rng>(rng: &mut R, n: usize) -> Vec<PaperRecord> {
    let date = NaiveDate::from_ymd_opt(2020, 2, 29).unwrap();
    (0..n)
        .map(|i| {
            let mut p = random_paper(rng, i);
            p.pub_date = date;
            p.id = PaperRecord::content_id(&p.title, &p.authors, p.pub_date, &p.venue);
            p
        })
        .collect()
}

/// Random stream input: up to 8 fields over up to 12 buckets with counts below 1000.
pub fn random_field_series<R: Rng>(rng: &mut R) -> FieldSeries {
    let buckets: Vec<_> = (0..rng.gen_range(0..=12))
        .map(|y| bucket_of(NaiveDate::from_ymd_opt(2000 + y, 1, 1).unwrap(), Granularity::Year))
        .collect();
    let fields = rng.gen_range(0..=8);
    let series = (0..fields)
        .map(|f| {
            let counts = buckets
                .iter()
                .map(|_| if rng.gen_bool(0.2) { 0 } else { rng.gen_range(0..1000) })
                .collect();
            (format!("field-{f}"), counts)
        })
        .collect();
    FieldSeries::from_parts(buckets, series).unwrap()
}
