//! Serializable report documents and the three output formats.
//!
//! JSON is rendered with stable field order so that parsing a report and
//! re-rendering it reproduces the bytes exactly; counts are decimal strings
//! since they may exceed 64 bits. CSV rows carry the fixed column set
//! `family,rank,prime,method,total,irr_w,verdict,classes,runtime_ms`.

use serde::{Deserialize, Serialize};

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassDoc {
    pub label: String,
    pub automizer: String,
    pub contribution: String,
}

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountDoc {
    pub family: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank: Option<u32>,
    pub group: String,
    pub prime: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub total: Option<String>,
    pub irr_w: String,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classes: Option<Vec<ClassDoc>>,
}

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassesDoc {
    pub family: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank: Option<u32>,
    pub group: String,
    pub prime: u64,
    pub class_count: u64,
    pub classes: Vec<ClassDoc>,
}

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RequestDoc {
    pub families: Vec<String>,
    pub max_rank: u32,
    pub primes: Vec<u64>,
    pub lift_exclusions: bool,
}

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyRowDoc {
    pub family: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank: Option<u32>,
    pub prime: u64,
    pub method: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub total: Option<String>,
    pub irr_w: String,
    pub verdict: String,
    pub expected: String,
    pub methods_agree: bool,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classes: Option<u64>,
    pub runtime_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class_rows: Option<Vec<ClassDoc>>,
}

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyDoc {
    pub request: RequestDoc,
    pub rows: Vec<VerifyRowDoc>,
    pub all_expected: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut text = serde_json::to_string_pretty(doc).expect("reports serialize");
    text.push('\n');
    text
}

fn opt(value: &Option<String>) -> &str {
    value.as_deref().unwrap_or("")
}

fn opt_num<T: ToString>(value: &Option<T>) -> String {
    value.as_ref().map(|v| v.to_string()).unwrap_or_default()
}

pub const SUMMARY_COLUMNS: &str = "family,rank,prime,method,total,irr_w,verdict,classes,runtime_ms";

fn summary_record(
    family: &str,
    rank: &Option<u32>,
    prime: u64,
    method: &str,
    total: &Option<String>,
    irr_w: &str,
    verdict: &str,
    classes: &Option<u64>,
    runtime_ms: u64,
) -> Vec<String> {
    vec![
        family.to_string(),
        opt_num(rank),
        prime.to_string(),
        method.to_string(),
        opt(total).to_string(),
        irr_w.to_string(),
        verdict.to_string(),
        opt_num(classes),
        runtime_ms.to_string(),
    ]
}

fn write_csv(records: &[Vec<String>]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for record in records {
        writer.write_record(record).expect("csv record");
    }
    String::from_utf8(writer.into_inner().expect("csv buffer")).expect("csv is utf-8")
}

fn class_records(classes: &[ClassDoc]) -> Vec<Vec<String>> {
    let mut records = vec![vec![
        "label".to_string(),
        "automizer".to_string(),
        "contribution".to_string(),
    ]];
    for class in classes {
        records.push(vec![
            class.label.clone(),
            class.automizer.clone(),
            class.contribution.clone(),
        ]);
    }
    records
}

pub fn count_to_csv(doc: &CountDoc) -> String {
    let header: Vec<String> = SUMMARY_COLUMNS.split(',').map(str::to_string).collect();
    let row = summary_record(
        &doc.family,
        &doc.rank,
        doc.prime,
        doc.method.as_deref().unwrap_or("none"),
        &doc.total,
        &doc.irr_w,
        &doc.verdict,
        &doc.classes.as_ref().map(|c| c.len() as u64),
        0,
    );
    let mut text = write_csv(&[header, row]);
    if let Some(classes) = &doc.classes {
        text.push('\n');
        text.push_str(&write_csv(&class_records(classes)));
    }
    text
}

pub fn classes_to_csv(doc: &ClassesDoc) -> String {
    write_csv(&class_records(&doc.classes))
}

pub fn verify_to_csv(doc: &VerifyDoc) -> String {
    let mut records = vec![SUMMARY_COLUMNS.split(',').map(str::to_string).collect()];
    for row in &doc.rows {
        records.push(summary_record(
            &row.family,
            &row.rank,
            row.prime,
            &row.method,
            &row.total,
            &row.irr_w,
            &row.verdict,
            &row.classes,
            row.runtime_ms,
        ));
    }
    write_csv(&records)
}

fn markdown_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut text = String::new();
    text.push('|');
    for cell in header {
        text.push_str(&format!(" {cell} |"));
    }
    text.push('\n');
    text.push('|');
    for _ in header {
        text.push_str(" --- |");
    }
    text.push('\n');
    for row in rows {
        text.push('|');
        for cell in row {
            text.push_str(&format!(" {cell} |"));
        }
        text.push('\n');
    }
    text
}

pub fn count_to_markdown(doc: &CountDoc) -> String {
    let mut text = format!(
        "# Weight count for {} at ell = {}\n\n",
        doc.group, doc.prime
    );
    let header = [
        "family", "rank", "prime", "method", "total", "irr_w", "verdict",
    ];
    let row = vec![
        doc.family.clone(),
        opt_num(&doc.rank),
        doc.prime.to_string(),
        doc.method.clone().unwrap_or_else(|| "none".into()),
        opt(&doc.total).to_string(),
        doc.irr_w.clone(),
        doc.verdict.clone(),
    ];
    text.push_str(&markdown_table(&header, &[row]));
    if let Some(note) = &doc.note {
        text.push_str(&format!("\nNote: {note}\n"));
    }
    if let Some(classes) = &doc.classes {
        text.push_str("\n## Classes\n\n");
        text.push_str(&markdown_table(
            &["label", "automizer", "contribution"],
            &classes
                .iter()
                .map(|c| vec![c.label.clone(), c.automizer.clone(), c.contribution.clone()])
                .collect::<Vec<_>>(),
        ));
    }
    text
}

pub fn classes_to_markdown(doc: &ClassesDoc) -> String {
    let mut text = format!(
        "# Stubborn classes of {} at ell = {} ({} classes)\n\n",
        doc.group, doc.prime, doc.class_count
    );
    text.push_str(&markdown_table(
        &["label", "automizer", "contribution"],
        &doc.classes
            .iter()
            .map(|c| vec![c.label.clone(), c.automizer.clone(), c.contribution.clone()])
            .collect::<Vec<_>>(),
    ));
    text
}

pub fn verify_to_markdown(doc: &VerifyDoc) -> String {
    let mut text = String::from("# Verification sweep\n\n");
    text.push_str(&format!(
        "families: {}; max rank: {}; primes: {}; lifted exclusions: {}\n\n",
        doc.request.families.join(","),
        doc.request.max_rank,
        doc.request
            .primes
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(","),
        doc.request.lift_exclusions
    ));
    let header = [
        "family", "rank", "prime", "method", "total", "irr_w", "verdict", "expected", "ok",
    ];
    let rows: Vec<Vec<String>> = doc
        .rows
        .iter()
        .map(|row| {
            vec![
                row.family.clone(),
                opt_num(&row.rank),
                row.prime.to_string(),
                row.method.clone(),
                opt(&row.total).to_string(),
                row.irr_w.clone(),
                row.verdict.clone(),
                row.expected.clone(),
                if row.ok { "yes" } else { "NO" }.to_string(),
            ]
        })
        .collect();
    text.push_str(&markdown_table(&header, &rows));
    text.push_str(&format!(
        "\nAll cells as expected: {}\n",
        if doc.all_expected { "yes" } else { "NO" }
    ));
    text
}
