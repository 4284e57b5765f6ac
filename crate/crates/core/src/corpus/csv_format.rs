use super::validate::{collect, split_multi, RawCitations, RawDate, RawRecord};
use super::{IngestIssue, PaperRecord};
use crate::error::CorpusError;

/// Canonical column order.
pub const CSV_HEADER: [&str; 7] = ["title", "authors", "abstract", "date", "citations", "venue", "fields"];

/// Parses the canonical CSV format. Headers are matched case-insensitively
/// after trimming and may appear in any order; extra columns are ignored.
pub fn parse_corpus_csv(bytes: &[u8]) -> Result<(Vec<PaperRecord>, Vec<IngestIssue>), CorpusError> {
    let text = std::str::from_utf8(bytes).map_err(|e| CorpusError::Encoding(e.valid_up_to()))?;
    let text = text.strip_prefix('\u{feff}').unwrap_or(text);

    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(true)
        .from_reader(text.as_bytes());
    let headers = reader
        .headers()
        .map_err(|e| CorpusError::Format(e.to_string()))?
        .clone();
    let normalized: Vec<String> = headers.iter().map(|h| h.trim().to_lowercase()).collect();

    let mut index = [0usize; 7];
    for (slot, name) in index.iter_mut().zip(CSV_HEADER) {
        *slot = normalized
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| CorpusError::MissingColumn(name.to_string()))?;
    }
    let [title, authors, abstract_col, date, citations, venue, fields] = index;
    let width = normalized.len();

    let mut rows = Vec::new();
    let mut broken = Vec::new();
    for (n, result) in reader.records().enumerate() {
        let record = match result {
            Ok(r) => r,
            Err(e) => {
                broken.push(IngestIssue::rejected(format!("row {}", n + 1), e.to_string()));
                continue;
            }
        };
        let locator = format!("row {}", n + 1);
        if record.len() != width {
            broken.push(IngestIssue::rejected(
                locator,
                format!("expected {width} cells, found {}", record.len()),
            ));
            continue;
        }
        let cell = |i: usize| record.get(i).unwrap_or_default();
        let citations_cell = cell(citations).trim();
        rows.push(RawRecord {
            locator,
            title: Some(cell(title).to_string()),
            authors: split_multi(cell(authors)),
            abstract_text: Some(cell(abstract_col).to_string()),
            date: if cell(date).trim().is_empty() {
                RawDate::Missing
            } else {
                RawDate::Text(cell(date).to_string())
            },
            citations: if citations_cell.is_empty() {
                RawCitations::Missing
            } else {
                RawCitations::Text(citations_cell.to_string())
            },
            venue: Some(cell(venue).to_string()),
            fields: split_multi(cell(fields)),
        });
    }

    let (records, mut issues) = collect(rows);
    issues.extend(broken);
    Ok((records, issues))
}

/// Serializes records in the canonical CSV layout.
pub fn write_corpus_csv(records: &[PaperRecord]) -> String {
    let mut writer = csv::WriterBuilder::new().from_writer(Vec::new());
    writer.write_record(CSV_HEADER).expect("in-memory write");
    for r in records {
        writer
            .write_record([
                r.title.as_str(),
                &r.authors.join(";"),
                &r.abstract_text,
                &r.pub_date.format("%Y-%m-%d").to_string(),
                &r.citation_count.to_string(),
                &r.venue,
                &r.fields_of_study.join(";"),
            ])
            .expect("in-memory write");
    }
    let bytes = writer.into_inner().expect("in-memory flush");
    String::from_utf8(bytes).expect("csv writer emits utf-8 from utf-8 input")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::Severity;

    const HEADER: &str = "title,authors,abstract,date,citations,venue,fields\n";

    #[test]
    fn missing_column_is_whole_file_failure() {
        let input = "title,authors,date,citations,venue,fields\nA,B,2019,1,V,F\n";
        match parse_corpus_csv(input.as_bytes()) {
            Err(CorpusError::MissingColumn(c)) => assert_eq!(c, "abstract"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn header_only_yields_nothing() {
        let (records, issues) = parse_corpus_csv(HEADER.as_bytes()).unwrap();
        assert!(records.is_empty());
        assert!(issues.is_empty());
    }

    #[test]
    fn headers_are_case_insensitive_and_reorderable() {
        let input =
            " Venue ,TITLE,Authors,abstract,Date,citations,fields,extra\nV1,Alpha,A;B,text,2019-03-01,10,CS,zzz\n";
        let (records, issues) = parse_corpus_csv(input.as_bytes()).unwrap();
        assert!(issues.is_empty(), "{issues:?}");
        assert_eq!(records[0].venue, "V1");
        assert_eq!(records[0].authors, ["A", "B"]);
    }

    #[test]
    fn non_utf8_is_encoding_error() {
        let mut bytes = HEADER.as_bytes().to_vec();
        bytes.extend_from_slice(&[0xff, 0xfe, b'\n']);
        assert!(matches!(parse_corpus_csv(&bytes), Err(CorpusError::Encoding(_))));
    }

    #[test]
    fn bad_rows_are_reported_and_excluded() {
        let input = format!(
            "{HEADER}\
             ,A,x,2019,1,V,F\n\
             T1,A,x,2019-02-30,1,V,F\n\
             T2,A,x,2019,-3,V,F\n\
             T3,  ; ,x,2019,1,V,F\n\
             T4,A,x,2019,1\n\
             T5,A;A, x ,2019,,,\n"
        );
        let (records, issues) = parse_corpus_csv(input.as_bytes()).unwrap();
        assert_eq!(records.len(), 1);
        let rejected: Vec<_> = issues.iter().filter(|i| i.severity == Severity::Rejected).collect();
        assert_eq!(rejected.len(), 5);
        let t5 = &records[0];
        assert_eq!(t5.authors, ["A"]);
        assert_eq!(t5.venue, "Unknown");
        assert_eq!(t5.citation_count, 0);
        assert_eq!(t5.abstract_text, " x ");
        let warnings = issues.iter().filter(|i| i.severity == Severity::Warning).count();
        assert_eq!(warnings, 2);
    }

    #[test]
    fn quoted_cells_survive() {
        let input = format!("{HEADER}\"Hello, \"\"world\"\"\",A,\"line1\nline2\",2020,3,V,F\n");
        let (records, _) = parse_corpus_csv(input.as_bytes()).unwrap();
        assert_eq!(records[0].title, "Hello, \"world\"");
        assert_eq!(records[0].abstract_text, "line1\nline2");
        let again = parse_corpus_csv(write_corpus_csv(&records).as_bytes()).unwrap().0;
        assert_eq!(again, records);
    }
}
