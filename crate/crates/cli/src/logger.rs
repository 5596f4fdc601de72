//! Run log: every record goes to `run.log`, warnings and errors also to
//! stderr.

use std::fs::File;
use std::io::Write;
use std::path::Path;
use std::sync::Mutex;

use log::{Level, LevelFilter, Log, Metadata, Record};

use crate::error::{CliError, Result};

struct RunLog {
    file: Mutex<File>,
    level: LevelFilter,
}

impl Log for RunLog {
    fn enabled(&self, metadata: &Metadata) -> bool {
        metadata.level() <= self.level
    }

    fn log(&self, record: &Record) {
        if !self.enabled(record.metadata()) {
            return;
        }
        let line = format!("[{}] {}: {}\n", record.level(), record.target(), record.args());
        if let Ok(mut f) = self.file.lock() {
            let _ = f.write_all(line.as_bytes());
        }
        if record.level() <= Level::Warn {
            eprint!("{line}");
        }
    }

    fn flush(&self) {
        if let Ok(mut f) = self.file.lock() {
            let _ = f.flush();
        }
    }
}

pub fn parse_level(s: &str) -> Result<LevelFilter> {
    s.parse().map_err(|_| CliError::schema(format!("unknown log level {s:?}")))
}

pub fn init(dir: &Path, level: LevelFilter) -> Result<()> {
    let path = dir.join("run.log");
    let file = File::create(&path).map_err(|e| CliError::io(&path, e))?;
    let logger = RunLog { file: Mutex::new(file), level };
    log::set_boxed_logger(Box::new(logger)).map_err(|e| CliError::schema(format!("logger: {e}")))?;
    log::set_max_level(level);
    Ok(())
}
