fn main() {
    println!("ballmap CLI placeholder");
}
